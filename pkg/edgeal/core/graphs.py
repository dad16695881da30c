"""Simple graphs on at most 32 vertices, stored as neighbor bitsets.

Vertex i (0-based) is identified with the variable x_{i+1} of the polynomial ring,
so every vertex set doubles as a set of variables.
"""

import itertools
import logging
import math
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from edgeal.core.errors import SizeGuardError
from edgeal.core.types import MAX_VERTICES, Edge, VertexSet

logger = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 8


def members(vs: VertexSet) -> list[int]:
    """Return the vertices of a bitset in increasing order."""
    out = []
    while vs:
        low = vs & -vs
        out.append(low.bit_length() - 1)
        vs ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def format_vertex_set(vs: VertexSet) -> str:
    return "{" + ",".join(str(v + 1) for v in members(vs)) + "}"


@dataclass(frozen=True, slots=True)
class Graph:
    """Labeled simple graph; `adj[v]` is the neighbor bitset of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"Vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"Expected {self.n} neighbor sets, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise ValueError(f"Vertex {v + 1} has a neighbor outside 1..{self.n}")
            if nbrs >> v & 1:
                raise ValueError(f"Loop at vertex {v + 1}")
            for w in members(nbrs):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"Adjacency is not symmetric between {v + 1} and {w + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from 0-based vertex pairs."""
        adj = [0] * max(n, 0)
        for u, v in edges:
            if u == v:
                raise ValueError(f"Loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge {u + 1}-{v + 1} is outside the vertex range 1..{n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> tuple[Edge, ...]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in members(higher))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def __str__(self) -> str:
        edges = " ".join(f"{u + 1}-{v + 1}" for u, v in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~nbrs & ~(1 << v) for v, nbrs in enumerate(g.adj)))


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Restrict `g` to `keep`; returns the relabeled graph and new-to-old vertex map."""
    keep &= g.vertices
    if not keep:
        raise ValueError("Cannot induce a subgraph on an empty vertex set")
    old = tuple(members(keep))
    position = {v: i for i, v in enumerate(old)}
    adj = tuple(vertex_set(position[w] for w in members(g.adj[v] & keep)) for v in old)
    return Graph(len(old), adj), old


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties broken by smallest index."""
    weight = [0] * g.n
    visited = 0
    order: list[int] = []
    for _ in range(g.n):
        best = max(members(g.vertices & ~visited), key=lambda v: (weight[v], -v))
        order.append(best)
        visited |= 1 << best
        for w in members(g.adj[best] & ~visited):
            weight[w] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """True iff the reverse MCS order is a perfect elimination ordering."""
    earlier = 0
    for v in maximum_cardinality_search(g):
        back = g.adj[v] & earlier
        for w in members(back):
            if back & ~(1 << w) & ~g.adj[w]:
                return False
        earlier |= 1 << v
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in members(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def odd_girth(g: Graph) -> int | float:
    """Length of a shortest odd cycle, or math.inf when `g` is bipartite.

    An edge joining two vertices at equal BFS depth d from some root closes an odd
    walk of length 2d + 1; the minimum over all roots is attained on a shortest odd
    cycle through its root.
    """
    best: int | float = math.inf
    for root in range(g.n):
        depth = [-1] * g.n
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * depth[v] + 1 >= best:
                break
            for w in members(g.adj[v]):
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif depth[w] == depth[v]:
                    best = min(best, 2 * depth[v] + 1)
    return best


def gaps(g: Graph) -> list[tuple[Edge, Edge]]:
    """Pairs of disjoint edges inducing exactly those two edges (induced 2K2)."""
    edges = g.edges()
    found = []
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not (g.adj[a] | g.adj[b]) & ((1 << c) | (1 << d)):
            found.append(((a, b), (c, d)))
    return found


def is_gap_free(g: Graph) -> bool:
    return not gaps(g)


def _bron_kerbosch(
    adj: tuple[int, ...], clique: int, candidates: int, excluded: int, out: list[int]
) -> None:
    """Bron–Kerbosch with Tomita pivoting over bitsets."""
    if not candidates and not excluded:
        out.append(clique)
        return
    pivot = max(members(candidates | excluded), key=lambda u: (adj[u] & candidates).bit_count())
    for v in members(candidates & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, clique | bit, candidates & adj[v], excluded & adj[v], out)
        candidates &= ~bit
        excluded |= bit


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    cliques: list[int] = []
    _bron_kerbosch(complement(g).adj, 0, g.vertices, 0, cliques)
    return sorted(cliques)


def minimal_vertex_covers(g: Graph) -> list[VertexSet]:
    """Complements of the maximal independent sets, in increasing bitset order."""
    return sorted({g.vertices ^ independent for independent in maximal_independent_sets(g)})


# --- Canonical forms and enumeration ---


def _pair_order(n: int) -> list[Edge]:
    # graph6 bit order: upper triangle, column by column
    return [(i, j) for j in range(1, n) for i in range(j)]


def _refined_colors(g: Graph) -> list[int]:
    """Stable colour refinement starting from degrees; colours are isomorphism-invariant."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in members(g.adj[v])))) for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == len(set(colors)):
            return refined
        colors = refined


def _labeling_key(g: Graph, order: tuple[int, ...], pairs: list[Edge]) -> int:
    key = 0
    for i, j in pairs:
        key = key << 1 | (g.adj[order[i]] >> order[j] & 1)
    return key


def _canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.n > MAX_ENUMERATION_VERTICES:
        raise SizeGuardError(
            f"Canonical forms are limited to {MAX_ENUMERATION_VERTICES} vertices, got {g.n}"
        )
    colors = _refined_colors(g)
    cells = [[v for v in range(g.n) if colors[v] == c] for c in sorted(set(colors))]
    pairs = _pair_order(g.n)
    best: tuple[int, tuple[int, ...]] | None = None
    for arrangement in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = tuple(v for cell in arrangement for v in cell)
        key = _labeling_key(g, order, pairs)
        if best is None or key < best[0]:
            best = (key, order)
    assert best is not None
    return best


def canonical_form(g: Graph) -> Graph:
    """The representative of g's isomorphism class with minimal adjacency bit string
    among the labelings that list colour-refinement classes in canonical order.

    That candidate set is itself isomorphism-invariant, so the form is canonical,
    but it is generally not the minimum over all n! labelings and will not match
    canonical labels produced by tools that minimise over every permutation.
    """
    _, order = _canonical_labeling(g)
    return _relabel(g, order)


def _relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    position = {old: new for new, old in enumerate(order)}
    return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges()))


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    found: dict[int, Graph] = {}
    for smaller in _representatives(n - 1):
        base = [(u, v) for u, v in smaller.edges()]
        for nbrs in range(1 << (n - 1)):
            g = Graph.from_edges(n, base + [(w, n - 1) for w in members(nbrs)])
            key, order = _canonical_labeling(g)
            if key not in found:
                found[key] = _relabel(g, order)
    logger.debug(f"{len(found)} isomorphism classes on {n} vertices")
    return tuple(found[key] for key in sorted(found, key=lambda k: (k.bit_count(), k)))


def enumerate_graphs(n: int, dedupe_iso: bool = True) -> Iterator[Graph]:
    """All graphs on n vertices, or one canonical representative per isomorphism class.

    Labeled graphs follow the graph6 bit order; representatives are `canonical_form`
    labelings, sorted by edge count and then by canonical key. Because the minimum
    is taken within colour-refinement cells, a representative can differ from the
    all-permutation minimum of its class.
    """
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise SizeGuardError(f"Enumeration needs 1 <= n <= {MAX_ENUMERATION_VERTICES}, got {n}")
    if dedupe_iso:
        yield from _representatives(n)
        return
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pair for k, pair in enumerate(pairs) if mask >> k & 1))
