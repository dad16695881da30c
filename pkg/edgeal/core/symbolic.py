"""Symbolic powers of edge ideals.

I(G)^(s) is the intersection of p_C^s over the minimal vertex covers C, so its
generators are the minimal nonnegative integer vectors e with sum_{i in C} e_i >= s
for every cover C. `minimal_solutions` finds them by branch and prune;
`symbolic_power_oracle` intersects the prime powers directly and serves as a check.
"""

import logging
import threading
from dataclasses import dataclass

from edgeal.core.errors import SizeGuardError, check_deadline
from edgeal.core.graphs import Graph, members, minimal_vertex_covers
from edgeal.core.ideals import Monomial, MonomialIdeal, intersect, minimize, prime_power
from edgeal.core.types import Exponents, VertexSet

logger = logging.getLogger(__name__)

ORACLE_MAX_VERTICES = 7
ORACLE_MAX_POWER = 4
_DEADLINE_POLL = 512
_CACHE_LIMIT = 4096

_POWER_CACHE: dict[tuple["CoverSystem", int], MonomialIdeal] = {}
_CACHE_LOCK = threading.Lock()


@dataclass(frozen=True, slots=True)
class CoverSystem:
    """The covering inequalities of a vertex-cover family on n variables."""

    n: int
    covers: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        for c in self.covers:
            if c & ~full:
                raise ValueError(f"Cover {c:#b} uses vertices outside 1..{self.n}")
        for a in self.covers:
            for b in self.covers:
                if a != b and a & b == a:
                    raise ValueError("Covers must be pairwise incomparable")

    @classmethod
    def from_graph(cls, g: Graph) -> "CoverSystem":
        return cls(g.n, tuple(minimal_vertex_covers(g)))

    @classmethod
    def from_family(cls, n: int, covers: list[VertexSet]) -> "CoverSystem":
        """Keep only the inclusion-minimal members of an arbitrary family."""
        unique = sorted(set(covers))
        minimal = [c for c in unique if not any(d != c and d & c == d for d in unique)]
        return cls(n, tuple(minimal))


def symbolic_member(cs: CoverSystem, m: Monomial, s: int) -> bool:
    if s < 1:
        raise ValueError(f"Symbolic powers need s >= 1, got {s}")
    return all(sum(m.exponents[i] for i in members(c)) >= s for c in cs.covers)


def minimal_solutions(
    cs: CoverSystem, s: int, deadline: float | None = None
) -> list[Exponents]:
    """All minimal e >= 0 with sum_{i in C} e_i >= s for every cover C.

    Search starts at the zero vector and raises one coordinate of a violated
    constraint at a time, choosing the constraint with the fewest coordinates
    still below s. Coordinates never exceed s.
    """
    if s < 1:
        raise ValueError(f"Symbolic powers need s >= 1, got {s}")
    constraints = [members(c) for c in cs.covers]
    start = (0,) * cs.n
    seen = {start}
    stack = [start]
    feasible: set[Exponents] = set()
    steps = 0
    while stack:
        steps += 1
        if steps % _DEADLINE_POLL == 0:
            check_deadline(deadline, "minimal_solutions")
        v = stack.pop()
        if any(all(a <= b for a, b in zip(f, v)) for f in feasible):
            continue
        violated = [c for c in constraints if sum(v[i] for i in c) < s]
        if not violated:
            feasible.add(v)
            continue
        branch = min((tuple(i for i in c if v[i] < s) for c in violated), key=len)
        for i in branch:
            w = v[:i] + (v[i] + 1,) + v[i + 1 :]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    logger.debug(f"minimal_solutions(s={s}) explored {len(seen)} vectors")
    ideal = minimize((Monomial(v) for v in feasible), cs.n)
    return [g.exponents for g in ideal.gens]


def cover_power(cs: CoverSystem, s: int, deadline: float | None = None) -> MonomialIdeal:
    """Intersection of p_C^s over the covers of `cs`, memoized per (cs, s)."""
    key = (cs, s)
    with _CACHE_LOCK:
        cached = _POWER_CACHE.get(key)
    if cached is not None:
        return cached
    ideal = MonomialIdeal(cs.n, tuple(Monomial(v) for v in minimal_solutions(cs, s, deadline)))
    with _CACHE_LOCK:
        if len(_POWER_CACHE) >= _CACHE_LIMIT:
            _POWER_CACHE.clear()
        _POWER_CACHE[key] = ideal
    return ideal


def symbolic_power(g: Graph, s: int, deadline: float | None = None) -> MonomialIdeal:
    """I(G)^(s); the zero ideal when g has no edges."""
    if s < 1:
        raise ValueError(f"Symbolic powers need s >= 1, got {s}")
    return cover_power(CoverSystem.from_graph(g), s, deadline)


def symbolic_power_oracle(g: Graph, s: int) -> MonomialIdeal:
    """I(G)^(s) by intersecting the explicit generator sets of every p_C^s."""
    if s < 1:
        raise ValueError(f"Symbolic powers need s >= 1, got {s}")
    if g.n > ORACLE_MAX_VERTICES or s > ORACLE_MAX_POWER:
        raise SizeGuardError(
            f"Oracle limited to n <= {ORACLE_MAX_VERTICES} and s <= {ORACLE_MAX_POWER}, "
            f"got n={g.n}, s={s}"
        )
    result: MonomialIdeal | None = None
    for cover in minimal_vertex_covers(g):
        prime = prime_power(g.n, cover, s)
        result = prime if result is None else intersect(result, prime)
    assert result is not None
    return result
