"""Multigraded Betti numbers and regularity of monomial ideals.

beta_{i,b}(I) is the rank of the reduced homology H~_{i-1} of the upper Koszul
simplicial complex K^b(I) = {S subset of supp(b) : x^(b - S) in I}, and it can only be
nonzero when b lies in the lcm lattice of the minimal generators.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from edgeal.core.errors import ConventionError, SizeGuardError, check_deadline
from edgeal.core.graphs import members
from edgeal.core.ideals import Monomial, MonomialIdeal
from edgeal.core.linalg import Matrix, matrix_rank
from edgeal.core.types import Multidegree, Regularity, VertexSet

logger = logging.getLogger(__name__)

TAYLOR_MAX_GENERATORS = 12


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    """Complex on the labels in `vertices`, stored by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets == (0,)`` is the
    irrelevant complex whose only face is the empty set.
    """

    vertices: VertexSet
    facets: tuple[VertexSet, ...]

    @classmethod
    def from_faces(cls, vertices: VertexSet, faces: list[VertexSet]) -> "SimplicialComplex":
        unique = sorted(set(faces), key=lambda f: (-f.bit_count(), f))
        facets: list[int] = []
        for f in unique:
            if f & ~vertices:
                raise ValueError(f"Face {f:#b} is not inside the vertex set {vertices:#b}")
            if not any(f & g == f for g in facets):
                facets.append(f)
        return cls(vertices, tuple(sorted(facets)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def dimension(self) -> int:
        if self.is_void:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def faces(self) -> list[VertexSet]:
        closure: set[int] = set()
        for f in self.facets:
            closure.update(_submasks(f))
        return sorted(closure, key=lambda f: (f.bit_count(), f))

    def faces_by_dimension(self) -> dict[int, list[VertexSet]]:
        out: dict[int, list[VertexSet]] = {}
        for f in self.faces():
            out.setdefault(f.bit_count() - 1, []).append(f)
        return out

    def is_cone(self) -> bool:
        """True when some vertex lies in every facet."""
        if self.is_void:
            return False
        common = self.facets[0]
        for f in self.facets[1:]:
            common &= f
        return common != 0


def _boundary(lower: list[VertexSet], upper: list[VertexSet]) -> Matrix:
    row = {f: r for r, f in enumerate(lower)}
    m = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for k, v in enumerate(members(face)):
            m[row[face & ~(1 << v)]][c] = -1 if k % 2 else 1
    return m


def reduced_homology_ranks(k: SimplicialComplex, characteristic: int = 0) -> dict[int, int]:
    """Nonzero ranks of H~_d(k), keyed by d (d = -1 is only nonzero for {empty})."""
    if k.is_void or k.is_cone():
        return {}
    chains = k.faces_by_dimension()
    top = max(chains)
    ranks = {
        d: matrix_rank(_boundary(chains[d - 1], chains[d]), characteristic)
        for d in range(0, top + 1)
    }
    out = {}
    for d in range(-1, top + 1):
        h = len(chains[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def euler_characteristic(k: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_{d >= -1} (-1)^d f_d; zero for the void complex."""
    return sum(1 if f.bit_count() % 2 else -1 for f in k.faces())


def lcm_lattice(a: MonomialIdeal, deadline: float | None = None) -> list[Multidegree]:
    """Joins of nonempty sets of generators, sorted by total degree then exponents."""
    if a.is_zero:
        raise ConventionError("The lcm lattice of the zero ideal is empty")
    gens = [g.exponents for g in a.gens]
    lattice = set(gens)
    frontier = list(lattice)
    while frontier:
        check_deadline(deadline, "lcm_lattice")
        fresh = []
        for m in frontier:
            for g in gens:
                j = tuple(map(max, m, g))
                if j not in lattice:
                    lattice.add(j)
                    fresh.append(j)
        frontier = fresh
    return sorted(lattice, key=lambda b: (sum(b), b))


def upper_koszul(a: MonomialIdeal, b: Multidegree) -> SimplicialComplex:
    """K^b(a): the faces are the slack sets {i : g_i < b_i} of generators g dividing x^b."""
    if len(b) != a.n:
        raise ValueError(f"Multidegree {b} does not live in {a.n} variables")
    support = Monomial(tuple(b)).support
    slack = []
    for g in a.gens:
        if all(x <= y for x, y in zip(g.exponents, b)):
            slack.append(sum(1 << i for i, (x, y) in enumerate(zip(g.exponents, b)) if x < y))
    return SimplicialComplex.from_faces(support, slack)


@dataclass(frozen=True, slots=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of an ideal as sorted (i, b, rank) triples."""

    n: int
    entries: tuple[tuple[int, Multidegree, int], ...]

    @classmethod
    def from_map(cls, n: int, ranks: dict[tuple[int, Multidegree], int]) -> "BettiTable":
        items = sorted(
            ((i, b, r) for (i, b), r in ranks.items() if r),
            key=lambda e: (e[0], sum(e[1]), e[1]),
        )
        return cls(n, tuple(items))

    def rank(self, i: int, b: Multidegree) -> int:
        return next((r for j, c, r in self.entries if j == i and c == tuple(b)), 0)

    def coarse(self) -> dict[tuple[int, int], int]:
        """Graded Betti numbers beta_{i,j}, j the total degree."""
        out: dict[tuple[int, int], int] = {}
        for i, b, r in self.entries:
            out[(i, sum(b))] = out.get((i, sum(b)), 0) + r
        return out

    def totals(self) -> list[int]:
        """beta_i summed over all degrees, for i = 0..pd."""
        if not self.entries:
            return []
        out = [0] * (self.projective_dimension + 1)
        for i, _, r in self.entries:
            out[i] += r
        return out

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    @property
    def regularity(self) -> Regularity:
        if not self.entries:
            raise ConventionError("Regularity is undefined for an empty Betti table")
        return max(sum(b) - i for i, b, _ in self.entries)

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"i": i, "multidegree": list(b), "total_degree": sum(b), "rank": r}
            for i, b, r in self.entries
        ]


def betti_table(
    a: MonomialIdeal, characteristic: int = 0, deadline: float | None = None
) -> BettiTable:
    if a.is_zero:
        raise ConventionError("The zero ideal has no Betti table")
    ranks: dict[tuple[int, Multidegree], int] = {}
    lattice = lcm_lattice(a, deadline)
    for b in lattice:
        check_deadline(deadline, "betti_table")
        for d, r in reduced_homology_ranks(upper_koszul(a, b), characteristic).items():
            ranks[(d + 1, b)] = r
    logger.debug(f"Betti table over {len(lattice)} lattice points, {len(ranks)} nonzero entries")
    return BettiTable.from_map(a.n, ranks)


def regularity(
    a: MonomialIdeal, characteristic: int = 0, deadline: float | None = None
) -> Regularity:
    """reg(I) = max{|b| - i : beta_{i,b}(I) != 0}."""
    if a.is_zero:
        raise ConventionError("reg of the zero ideal is not defined")
    if a.is_unit:
        raise ConventionError("reg of the unit ideal is not defined")
    return betti_table(a, characteristic, deadline).regularity


def taylor_betti_oracle(a: MonomialIdeal, characteristic: int = 0) -> BettiTable:
    """Betti numbers from the Taylor complex restricted to each lcm degree.

    In degree b the chains are the generator subsets F with lcm(F) = b and the
    differential keeps the faces F \\ {j} whose lcm is still b.
    """
    if a.is_zero:
        raise ConventionError("The zero ideal has no Betti table")
    count = len(a.gens)
    if count > TAYLOR_MAX_GENERATORS:
        raise SizeGuardError(
            f"Taylor oracle limited to {TAYLOR_MAX_GENERATORS} generators, got {count}"
        )
    gens = [g.exponents for g in a.gens]
    lcms: list[Multidegree] = [(0,) * a.n] * (1 << count)
    groups: dict[Multidegree, dict[int, list[int]]] = {}
    for subset in range(1, 1 << count):
        low = subset & -subset
        rest = subset ^ low
        g = gens[low.bit_length() - 1]
        lcms[subset] = g if not rest else tuple(map(max, lcms[rest], g))
        groups.setdefault(lcms[subset], {}).setdefault(subset.bit_count(), []).append(subset)

    ranks: dict[tuple[int, Multidegree], int] = {}
    for b, chains in groups.items():
        boundary_rank: dict[int, int] = {}
        for size, faces in chains.items():
            lower = chains.get(size - 1, [])
            row = {f: r for r, f in enumerate(lower)}
            m = [[0] * len(faces) for _ in lower]
            for c, face in enumerate(faces):
                for k, j in enumerate(members(face)):
                    smaller = face & ~(1 << j)
                    if smaller in row:
                        m[row[smaller]][c] = -1 if k % 2 else 1
            boundary_rank[size] = matrix_rank(m, characteristic) if lower else 0
        for size, faces in chains.items():
            h = len(faces) - boundary_rank[size] - boundary_rank.get(size + 1, 0)
            if h:
                ranks[(size - 1, b)] = h
    return BettiTable.from_map(a.n, ranks)
