import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeal.core.errors import AmbientMismatchError
from edgeal.core.graphs import Graph
from edgeal.core.ideals import (
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    edge_ideal,
    equals,
    ideal_sum,
    intersect,
    minimize,
    missing_generators,
    parse_ideal,
    power,
    prime_power,
    product,
    unit_ideal,
    variable_ideal,
    zero_ideal,
)


def test_monomial_text_form() -> None:
    """
    Test parsing and rendering of monomials.
    Why: Witnesses are rendered as text and must be re-readable by hand and by
    `Monomial.parse`.
    """
    m = Monomial.parse("x1^2*x3", 3)
    assert m.exponents == (2, 0, 1)
    assert str(m) == "x1^2*x3"
    assert str(Monomial.one(3)) == "1"
    assert m.degree == 3
    assert m.support == 0b101
    with pytest.raises(ValueError):
        Monomial.parse("x4", 3)


def test_monomial_exponent_bounds() -> None:
    """
    Test the exponent range checks.
    Why: Exponents are bounded to 16 bits; exceeding the bound must be an explicit
    overflow, and negative exponents are never valid monomials.
    """
    with pytest.raises(OverflowError):
        Monomial((65536,))
    with pytest.raises(ValueError):
        Monomial((-1, 0))
    assert Monomial((65535,)).degree == 65535


def test_monomial_arithmetic() -> None:
    """
    Test divisibility, lcm, gcd and monomial colon.
    Why: These four operations are the whole arithmetic that ideal sums,
    intersections and colons reduce to.
    """
    a = Monomial((2, 1, 0))
    b = Monomial((1, 1, 1))
    assert not a.divides(b)
    assert Monomial((1, 1, 0)).divides(a)
    assert a.lcm(b).exponents == (2, 1, 1)
    assert a.gcd(b).exponents == (1, 1, 0)
    assert a.colon(b).exponents == (1, 0, 0)
    assert (a * b).exponents == (3, 2, 1)
    assert (b**3).exponents == (3, 3, 3)


def test_ambient_mismatch_is_rejected() -> None:
    """
    Test that mixing variable counts raises.
    Why: Silently zipping exponent vectors of different lengths would truncate one
    of them and produce wrong ideals.
    """
    with pytest.raises(AmbientMismatchError):
        Monomial.one(2).divides(Monomial.one(3))
    with pytest.raises(AmbientMismatchError):
        variable_ideal(2, 0b11) + variable_ideal(3, 0b1)


def test_minimize_keeps_minimal_sorted_generators() -> None:
    """
    Test that minimize drops multiples and sorts canonically.
    Why: Ideal equality is generator-tuple equality, which only works when every
    ideal is stored in one canonical form.
    """
    gens = [Monomial((1, 1, 1)), Monomial((0, 1, 0)), Monomial((2, 0, 0)), Monomial((1, 1, 0))]
    ideal = minimize(gens, 3)
    assert str(ideal) == "(x2, x1^2)"
    assert minimize(reversed(gens), 3) == ideal


def test_zero_and_unit_ideals() -> None:
    """
    Test the zero and unit ideal conventions.
    Why: The zero ideal arises from edgeless graphs and the unit ideal from colons;
    both need distinct, recognisable forms.
    """
    zero, unit = zero_ideal(3), unit_ideal(3)
    assert zero.is_zero and not zero.is_unit
    assert unit.is_unit and str(unit) == "(1)"
    assert str(zero) == "(0)"
    assert unit.variables() == 0b111
    assert parse_ideal("(0)", 3) == zero
    assert power(edge_ideal(Graph.from_edges(3, [(0, 1)])), 0) == unit


def test_edge_ideal_powers(k3: Graph) -> None:
    """
    Test I(K3) and I(K3)^2.
    Why: Ordinary powers are the reference point every symbolic power is compared
    with.
    """
    ideal = edge_ideal(k3)
    assert str(ideal) == "(x1*x2, x1*x3, x2*x3)"
    square = power(ideal, 2)
    assert len(square.gens) == 6
    assert Monomial((2, 2, 0)) in square
    assert Monomial((1, 1, 1)) not in square


def test_intersection_and_prime_powers() -> None:
    """
    Test intersection of primes and the generators of a prime power.
    Why: The symbolic power oracle is an iterated intersection of prime powers.
    """
    assert str(variable_ideal(2, 0b01) & variable_ideal(2, 0b10)) == "(x1*x2)"
    assert len(prime_power(3, 0b111, 2).gens) == 6
    assert intersect(unit_ideal(2), variable_ideal(2, 0b01)) == variable_ideal(2, 0b01)


def test_colon_by_monomial() -> None:
    """
    Test a colon that becomes the unit ideal and one that does not.
    Why: Colon ideals are compared against closed forms in several statements, and
    the unit-ideal case needs to be detected explicitly.
    """
    ideal = parse_ideal("(x1*x2, x2*x3)", 3)
    assert colon_by_monomial(ideal, Monomial((0, 1, 0))) == variable_ideal(3, 0b101)
    assert colon_by_monomial(ideal, Monomial((1, 1, 0))).is_unit


def test_containment_helpers() -> None:
    """
    Test subset tests and the list of generators outside another ideal.
    Why: A failing containment must name the offending generators in its witness.
    """
    small = parse_ideal("(x1*x2*x3)", 3)
    big = parse_ideal("(x1*x2, x3^2)", 3)
    assert small <= big
    assert not big <= small
    assert [str(m) for m in missing_generators(big, small)] == ["x1*x2", "x3^2"]
    assert isinstance(big, MonomialIdeal)


def test_ideal_json_form() -> None:
    """
    Test the exponent-vector JSON form of an ideal.
    Why: Machine consumers of reports read ideals as exponent vectors rather than
    parsing the text form.
    """
    ideal = parse_ideal("(x1*x2, x3^2)", 3)
    assert ideal.to_json() == {"n": 3, "gens": [[1, 1, 0], [0, 0, 2]]}


AMBIENT = 3


def _monomials(max_exponent: int = 3) -> st.SearchStrategy[Monomial]:
    exponents = st.tuples(*[st.integers(0, max_exponent)] * AMBIENT)
    return exponents.map(Monomial)


def _ideals() -> st.SearchStrategy[MonomialIdeal]:
    return st.lists(_monomials(), min_size=1, max_size=4).map(lambda gens: minimize(gens, AMBIENT))


@settings(max_examples=100, deadline=None)
@given(st.lists(_monomials(), min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_minimize_is_idempotent_and_order_insensitive(
    gens: list[Monomial], rng: random.Random
) -> None:
    """
    Test that minimize ignores input order and fixes its own output.
    Why: Ideals are compared by their generator tuples, so the canonical form must
    not depend on how the generators were produced.
    """
    ideal = minimize(gens, AMBIENT)
    shuffled = gens[:]
    rng.shuffle(shuffled)
    assert minimize(shuffled, AMBIENT) == ideal
    assert minimize(ideal.gens, AMBIENT) == ideal
    assert all(any(g.divides(m) for g in ideal.gens) for m in gens)


@settings(max_examples=100, deadline=None)
@given(_ideals(), _monomials(2), _monomials(2))
def test_colon_laws(a: MonomialIdeal, u: Monomial, v: Monomial) -> None:
    """
    Test (a : u) contains a and ((a : u) : v) = (a : uv).
    Why: Colon ideals by products of edges are built one edge at a time in the
    statements, which is only sound if iterated colons agree with one colon.
    """
    assert a <= colon_by_monomial(a, u)
    assert colon_by_monomial(colon_by_monomial(a, u), v) == colon_by_monomial(a, u * v)


@settings(max_examples=100, deadline=None)
@given(_ideals(), _ideals(), _ideals())
def test_lattice_laws(a: MonomialIdeal, b: MonomialIdeal, c: MonomialIdeal) -> None:
    """
    Test that sum and intersection are the least upper and greatest lower bounds.
    Why: Containment checks between sums, products and intersections of powers are
    the substance of every containment statement.
    """
    assert product(a, b) <= intersect(a, b)
    assert a <= ideal_sum(a, b) and b <= ideal_sum(a, b)
    assert intersect(a, b) <= a and intersect(a, b) <= b
    assert (a <= c and b <= c) == (ideal_sum(a, b) <= c)
    assert (c <= a and c <= b) == (c <= intersect(a, b))


@settings(max_examples=100, deadline=None)
@given(_ideals(), _ideals())
def test_equals_is_mutual_containment(a: MonomialIdeal, b: MonomialIdeal) -> None:
    """
    Test equals against containment in both directions.
    Why: Equality of canonical generator sets must coincide with equality of ideals,
    or colon identities would be judged by representation.
    """
    assert equals(a, b) == (a <= b and b <= a)
    assert equals(a, minimize(reversed(a.gens), AMBIENT))
    assert equals(ideal_sum(a, b), a) == (b <= a)


def test_equals_rejects_mixed_ambients() -> None:
    """
    Test that equals refuses ideals in different polynomial rings.
    Why: Generator tuples of different lengths can never be compared meaningfully.
    """
    with pytest.raises(AmbientMismatchError):
        equals(unit_ideal(2), unit_ideal(3))
