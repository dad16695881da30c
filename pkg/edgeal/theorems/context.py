import logging
from collections.abc import Callable
from functools import cached_property

from edgeal.core.betti import regularity
from edgeal.core.errors import InvalidEdgeError
from edgeal.core.graphs import (
    MAX_ENUMERATION_VERTICES,
    Graph,
    canonical_form,
    complement,
    is_bipartite,
    is_chordal,
    is_gap_free,
    odd_girth,
)
from edgeal.core.ideals import MonomialIdeal, edge_ideal, ideal_sum, power
from edgeal.core.symbolic import symbolic_power
from edgeal.core.types import Edge, Regularity
from edgeal.data.graph6 import encode_graph6
from edgeal.data.models import CacheKey
from edgeal.data.protocols import ResultCache

logger = logging.getLogger(__name__)


def graph_id(g: Graph) -> str:
    """Canonical graph6 string; the labeled encoding beyond the canonical-form guard."""
    if g.n <= MAX_ENUMERATION_VERTICES:
        return encode_graph6(canonical_form(g))
    return encode_graph6(g)


class GraphContext:
    """Memo of the ideals and regularities of one graph, shared by its checkers.

    Regularities of I, I^s, I^(s) and I^(s+1) + I^s depend only on the isomorphism
    class, so they are also looked up in and written to the optional result cache.
    `deadline` is polled by the heavy kernels and may be reset between instances.
    """

    def __init__(
        self,
        g: Graph,
        *,
        characteristic: int = 0,
        deadline: float | None = None,
        cache: ResultCache | None = None,
    ) -> None:
        self.graph = g
        self.characteristic = characteristic
        self.deadline = deadline
        self.cache = cache
        self._powers: dict[int, MonomialIdeal] = {}
        self._symbolic: dict[int, MonomialIdeal] = {}
        self._regs: dict[tuple[str, int], Regularity] = {}

    @cached_property
    def graph_id(self) -> str:
        return graph_id(self.graph)

    @cached_property
    def edge_ideal(self) -> MonomialIdeal:
        return edge_ideal(self.graph)

    @cached_property
    def odd_girth(self) -> int | float:
        return odd_girth(self.graph)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self.graph)

    @cached_property
    def co_chordal(self) -> bool:
        return is_chordal(complement(self.graph))

    @cached_property
    def gap_free(self) -> bool:
        return is_gap_free(self.graph)

    @property
    def has_edges(self) -> bool:
        return self.graph.edge_count > 0

    def require_edge(self, e: Edge) -> Edge:
        u, v = sorted(e)
        if u == v or not 0 <= u < self.graph.n or not 0 <= v < self.graph.n:
            raise InvalidEdgeError(f"{u + 1}-{v + 1} is not a vertex pair of the graph")
        if not self.graph.has_edge(u, v):
            raise InvalidEdgeError(f"x{u + 1}x{v + 1} is not an edge of the graph")
        return u, v

    def power(self, s: int) -> MonomialIdeal:
        if s not in self._powers:
            self._powers[s] = power(self.edge_ideal, s)
        return self._powers[s]

    def symbolic(self, s: int) -> MonomialIdeal:
        if s not in self._symbolic:
            self._symbolic[s] = symbolic_power(self.graph, s, self.deadline)
        return self._symbolic[s]

    def mixed(self, s: int) -> MonomialIdeal:
        """I^(s+1) + I^s."""
        return ideal_sum(self.symbolic(s + 1), self.power(s))

    def reg(self, a: MonomialIdeal) -> Regularity | None:
        """reg of an ideal arising inside a statement; None for the unit ideal."""
        if a.is_unit:
            return None
        return regularity(a, self.characteristic, self.deadline)

    def _invariant_reg(
        self, operation: str, s: int, build: Callable[[], MonomialIdeal]
    ) -> Regularity:
        memo = (operation, s)
        if memo in self._regs:
            return self._regs[memo]
        key = CacheKey(self.graph_id, operation, f"s={s}", self.characteristic)
        stored = self.cache.get(key) if self.cache is not None else None
        if stored is not None:
            value = int(stored)
        else:
            value = regularity(build(), self.characteristic, self.deadline)
            if self.cache is not None:
                self.cache.put(key, str(value))
        self._regs[memo] = value
        return value

    def reg_edge(self) -> Regularity:
        return self._invariant_reg("reg_edge_ideal", 1, lambda: self.edge_ideal)

    def reg_power(self, s: int) -> Regularity:
        return self._invariant_reg("reg_power", s, lambda: self.power(s))

    def reg_symbolic(self, s: int) -> Regularity:
        return self._invariant_reg("reg_symbolic_power", s, lambda: self.symbolic(s))

    def reg_mixed(self, s: int) -> Regularity:
        return self._invariant_reg("reg_symbolic_plus_power", s, lambda: self.mixed(s))
