"""Plain edge-list text: a vertex count line followed by one ``u v`` pair per line.

Vertices are 1-based in text and 0-based in `Graph`. Blank lines and ``#`` comments
are ignored.
"""

import re
from pathlib import Path

from edgeal.core.graphs import Graph

_INLINE_SEPARATORS = re.compile(r"[,;]")


def _pair(token: str, where: str) -> tuple[int, int]:
    parts = token.replace("-", " ").split()
    if len(parts) != 2:
        raise ValueError(f"{where}: expected two vertices, got {token.strip()!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise ValueError(f"{where}: vertices must be integers, got {token.strip()!r}") from e
    if u < 1 or v < 1:
        raise ValueError(f"{where}: vertices are numbered from 1, got {token.strip()!r}")
    return u - 1, v - 1


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    numbered = [(k, ln) for k, ln in enumerate(lines, start=1) if ln]
    if not numbered:
        raise ValueError("Edge list is empty; the first line must give the vertex count")
    lineno, head = numbered[0]
    try:
        n = int(head)
    except ValueError as e:
        raise ValueError(f"line {lineno}: expected the vertex count, got {head!r}") from e
    edges = [_pair(ln, f"line {k}") for k, ln in numbered[1:]]
    return Graph.from_edges(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def render_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_inline_edges(text: str, n: int | None = None) -> Graph:
    """Parse ``"1 2, 2 3"`` (or ``"1-2;2-3"``); n defaults to the largest vertex."""
    tokens = [t for t in _INLINE_SEPARATORS.split(text) if t.strip()]
    edges = [_pair(t, f"edge {k}") for k, t in enumerate(tokens, start=1)]
    largest = max((max(u, v) + 1 for u, v in edges), default=1)
    if n is None:
        n = largest
    elif n < largest:
        raise ValueError(f"Edge list mentions vertex {largest} but n={n}")
    return Graph.from_edges(n, edges)
