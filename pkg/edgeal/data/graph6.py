"""graph6 encoding and decoding for graphs on at most 62 vertices.

Format: one byte N(n) = n + 63, then the upper triangle of the adjacency matrix
read column by column ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte,
most significant bit first, each byte offset by 63 and the last one zero padded.
"""

import logging
from collections.abc import Iterator
from pathlib import Path

from edgeal.core.errors import Graph6DecodeError
from edgeal.core.graphs import Graph
from edgeal.core.types import MAX_VERTICES

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_OFFSET = 63


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = value << 1 | bit
        body.append(chr(value + _OFFSET))
    return chr(g.n + _OFFSET) + "".join(body)


def decode_graph6(line: str) -> Graph:
    """Decode one graph6 line; errors report the byte offset within the line."""
    text = line.rstrip("\r\n")
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
        base = len(HEADER)
    else:
        base = 0
    if not text:
        raise Graph6DecodeError("Empty graph6 string", base)
    for k, ch in enumerate(text):
        if not _OFFSET <= ord(ch) <= 126:
            raise Graph6DecodeError(f"Byte {ch!r} is outside the graph6 range 63..126", base + k)
    n = ord(text[0]) - _OFFSET
    if n == 63:
        raise Graph6DecodeError("Graphs on more than 62 vertices are unsupported", base)
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6DecodeError(f"Vertex count {n} is outside 1..{MAX_VERTICES}", base)
    pairs = _pairs(n)
    expected = -(-len(pairs) // 6)
    body = text[1:]
    if len(body) != expected:
        raise Graph6DecodeError(
            f"Expected {expected} data bytes for n={n}, found {len(body)}",
            base + 1 + min(len(body), expected),
        )
    edges = []
    for k, ch in enumerate(body):
        value = ord(ch) - _OFFSET
        for bit in range(6):
            index = 6 * k + bit
            if not value >> (5 - bit) & 1:
                continue
            if index >= len(pairs):
                raise Graph6DecodeError("Nonzero padding bit", base + 1 + k)
            edges.append(pairs[index])
    return Graph.from_edges(n, edges)


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield the graphs of a graph6 file, skipping blank lines."""
    with open(path, encoding="ascii") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                yield decode_graph6(line.strip())
            except Graph6DecodeError as e:
                logger.error(f"{path}:{lineno}: {e}")
                raise


def write_graph6_file(path: str | Path, graphs: list[Graph]) -> None:
    with open(path, "w", encoding="ascii") as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")
    logger.info(f"Wrote {len(graphs)} graphs to {path}")
