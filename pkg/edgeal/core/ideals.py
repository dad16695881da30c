"""Exact arithmetic on monomials and monomial ideals.

A MonomialIdeal always carries its minimal generating set G(I), sorted by degree
and then lexicographically with x1 > x2 > ... > xn, so two ideals are equal exactly
when their generator tuples are. `minimize` is the canonical constructor.
"""

import itertools
import logging
import re
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from edgeal.core.errors import AmbientMismatchError
from edgeal.core.graphs import Graph, members
from edgeal.core.types import MAX_EXPONENT, Exponents, VertexSet

logger = logging.getLogger(__name__)

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, slots=True)
class Monomial:
    """x^a for an exponent vector a; slot i holds deg_{x_{i+1}}."""

    exponents: Exponents

    def __post_init__(self) -> None:
        for e in self.exponents:
            if e < 0:
                raise ValueError(f"Negative exponent in {self.exponents}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"Exponent {e} exceeds the 16-bit limit {MAX_EXPONENT}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        return cls(tuple(1 if k == i else 0 for k in range(n)))

    @classmethod
    def squarefree(cls, n: int, vs: VertexSet) -> "Monomial":
        return cls(tuple(vs >> k & 1 for k in range(n)))

    @classmethod
    def edge(cls, n: int, u: int, v: int) -> "Monomial":
        return cls.squarefree(n, (1 << u) | (1 << v))

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        """Parse the text form, e.g. ``"x1^2*x3"`` or ``"1"``."""
        text = text.strip()
        exps = [0] * n
        if text == "1":
            return cls(tuple(exps))
        for factor in text.split("*"):
            match = _FACTOR.match(factor.strip())
            if not match:
                raise ValueError(f"Cannot parse monomial factor {factor!r} in {text!r}")
            index = int(match.group(1))
            if not 1 <= index <= n:
                raise ValueError(f"Variable x{index} is outside x1..x{n}")
            exps[index - 1] += int(match.group(2) or 1)
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> VertexSet:
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def _check(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(self.n, other.n)

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents, strict=True))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(a * k for a in self.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the generator of ((self) : other)."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.degree, tuple(-e for e in self.exponents)

    def __str__(self) -> str:
        factors = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(self.exponents) if e
        ]
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """Monomial ideal of K[x1..xn] given by its sorted minimal generators."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.n != self.n:
                raise AmbientMismatchError(self.n, g.n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def variables(self) -> VertexSet:
        """Variables that belong to the ideal (degree-one generators, or all for the unit)."""
        if self.is_unit:
            return (1 << self.n) - 1
        return sum(g.support for g in self.gens if g.degree == 1)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "gens": [list(g.exponents) for g in self.gens]}


def _check_ambient(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise AmbientMismatchError(a.n, b.n)


def minimize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Divisibility-minimal, canonically sorted generating set of the ideal (gens)."""
    unique = sorted(set(gens), key=Monomial.sort_key)
    if n is None:
        if not unique:
            raise ValueError("The variable count is required to build the zero ideal")
        n = unique[0].n
    kept: list[Monomial] = []
    if unique and unique[0].degree == unique[-1].degree:
        # equal degrees: divisibility means equality
        kept = unique
    else:
        for g in unique:
            if not any(k.divides(g) for k in kept):
                kept.append(g)
    return MonomialIdeal(n, tuple(kept))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (Monomial.one(n),))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return minimize((Monomial.edge(g.n, u, v) for u, v in g.edges()), g.n)


def variable_ideal(n: int, vs: VertexSet) -> MonomialIdeal:
    """The monomial prime p_A generated by the variables in A."""
    return minimize((Monomial.variable(n, i) for i in members(vs)), n)


def prime_power(n: int, vs: VertexSet, s: int) -> MonomialIdeal:
    """p_A^s: every degree-s monomial in the variables of A."""
    gens = []
    for combo in itertools.combinations_with_replacement(members(vs), s):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        gens.append(Monomial(tuple(exps)))
    return minimize(gens, n)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return minimize((x * y for x in a.gens for y in b.gens), a.n)


def power(a: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 0:
        raise ValueError(f"Power must be nonnegative, got {s}")
    result = unit_ideal(a.n)
    for _ in range(s):
        result = product(result, a)
    return result


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return minimize(a.gens + b.gens, a.n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return minimize((x.lcm(y) for x in a.gens for y in b.gens), a.n)


def colon_by_monomial(a: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    if a.n != u.n:
        raise AmbientMismatchError(a.n, u.n)
    return minimize((g.colon(u) for g in a.gens), a.n)


def contains(a: MonomialIdeal, m: Monomial) -> bool:
    if a.n != m.n:
        raise AmbientMismatchError(a.n, m.n)
    return any(g.divides(m) for g in a.gens)


def is_subset(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_ambient(a, b)
    return all(contains(b, g) for g in a.gens)


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_ambient(a, b)
    return a.gens == b.gens


def missing_generators(a: MonomialIdeal, b: MonomialIdeal) -> list[Monomial]:
    """Generators of `a` that do not lie in `b`; empty iff a ⊆ b."""
    _check_ambient(a, b)
    return [g for g in a.gens if not contains(b, g)]


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse ``"(x1*x2, x2*x3)"``; ``"(0)"`` is the zero ideal and ``"(1)"`` the unit ideal."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"Ideal text must be parenthesised: {text!r}")
    body = body[1:-1].strip()
    if body in ("", "0"):
        return zero_ideal(n)
    return minimize((Monomial.parse(part, n) for part in body.split(",")), n)
