"""Named graph families and the input sources a run can draw graphs from."""

import logging
import os
import re
from collections.abc import Iterator

from edgeal.cli.config import RunConfig
from edgeal.core.graphs import Graph, enumerate_graphs
from edgeal.data.edgelist import parse_inline_edges, read_edge_list
from edgeal.data.graph6 import decode_graph6, read_graph6_file

logger = logging.getLogger(__name__)

# Seven vertices: a triangle on 1, 2, 3 and one on 5, 6, 7 joined by the path 3-4-5.
EXAMPLE42_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6))

_SHORTHAND = re.compile(r"^(?P<kind>[CPK])(?P<a>\d+)(?:,(?P<b>\d+))?$")
_LONGHAND = re.compile(r"^(?P<name>[a-z_0-9]+)(?:[:(](?P<params>[\d, ]*)\)?)?$")
_SHORT_NAMES = {"C": "cycle", "P": "path", "K": "complete"}


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"A path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"A complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"Both sides of K{a},{b} must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def example42() -> Graph:
    return Graph.from_edges(7, EXAMPLE42_EDGES)


def builtin_families(name: str, params: tuple[int, ...] = ()) -> Iterator[Graph]:
    """Graphs of a named family, one per size in `params`."""
    if name in ("cycle", "path", "complete") and not params:
        raise ValueError(f"{name} needs a size, e.g. {name}:5")
    if name == "cycle":
        yield from (cycle(n) for n in params)
    elif name == "path":
        yield from (path(n) for n in params)
    elif name == "complete":
        yield from (complete(n) for n in params)
    elif name == "complete_bipartite":
        if len(params) != 2:
            raise ValueError("complete_bipartite takes two sizes, e.g. complete_bipartite:2,3")
        yield complete_bipartite(*params)
    elif name == "example42":
        yield example42()
    else:
        raise ValueError(
            f"Unknown family '{name}' (known: cycle, path, complete, complete_bipartite, example42)"
        )


def parse_builtin(text: str) -> tuple[str, tuple[int, ...]]:
    """Read "C5", "K2,3", "cycle:5", "cycle(5)" or "example42" into (family, sizes)."""
    text = text.strip()
    short = _SHORTHAND.match(text)
    if short:
        if short["b"] is not None:
            if short["kind"] != "K":
                raise ValueError(f"Only K takes two sizes, got {text!r}")
            return "complete_bipartite", (int(short["a"]), int(short["b"]))
        return _SHORT_NAMES[short["kind"]], (int(short["a"]),)
    long = _LONGHAND.match(text)
    if not long:
        raise ValueError(f"Cannot read builtin graph {text!r}")
    raw = long["params"] or ""
    return long["name"], tuple(int(p) for p in raw.split(",") if p.strip())


def load_graphs(config: RunConfig) -> list[Graph]:
    """Materialize the configured input source."""
    source = config.source
    if source == "exhaustive":
        assert config.exhaustive is not None
        graphs = list(enumerate_graphs(config.exhaustive))
    elif source == "graph6":
        assert config.graph6 is not None
        if os.path.isfile(config.graph6):
            graphs = list(read_graph6_file(config.graph6))
        else:
            graphs = [decode_graph6(config.graph6.strip())]
    elif source == "edges":
        assert config.edges is not None
        graphs = [parse_inline_edges(config.edges, config.vertices)]
    elif source == "edge_file":
        assert config.edge_file is not None
        graphs = [read_edge_list(config.edge_file)]
    else:
        assert config.builtin is not None
        graphs = list(builtin_families(*parse_builtin(config.builtin)))
    logger.info(f"Loaded {len(graphs)} graphs from {source}")
    return graphs
