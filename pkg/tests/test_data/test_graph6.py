from pathlib import Path

import networkx as nx
import pytest

from edgeal.core.errors import Graph6DecodeError
from edgeal.core.graphs import Graph, enumerate_graphs
from edgeal.data.graph6 import (
    decode_graph6,
    encode_graph6,
    read_graph6_file,
    write_graph6_file,
)


def test_decode_two_vertex_graphs() -> None:
    """
    Test the two graphs on two vertices.
    Why: "A_" and "A?" are the shortest non-trivial graph6 strings and fix the
    vertex-count byte and the most-significant-bit-first packing.
    """
    assert decode_graph6("A_").edges() == ((0, 1),)
    assert decode_graph6("A?").edge_count == 0
    assert decode_graph6(">>graph6<<A_\n").edges() == ((0, 1),)
    assert decode_graph6("@").n == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_encoding_matches_networkx(n: int) -> None:
    """
    Test encode_graph6 against networkx on every labeled graph with n vertices.
    Why: graph6 ids are exchanged with external tools (nauty, networkx); a
    bit-order slip would give ids nobody else can read.
    """
    for g in enumerate_graphs(n, dedupe_iso=False):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
        assert encode_graph6(g) == expected
        assert decode_graph6(expected) == g


def test_encode_example_graph(example_graph: Graph) -> None:
    """
    Test the labeled encoding of the two-triangle graph.
    Why: Reports quote this string as the input labeling of the gap fixture.
    """
    assert encode_graph6(example_graph) == "FxCGW"


def test_encode_cycle(c5: Graph) -> None:
    """
    Test that decoding undoes encoding for a seven-vertex graph with padding.
    Why: 21 adjacency bits need four bytes with three padding bits, the case where
    a miscounted tail would drop the last edges.
    """
    seven = Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
    assert decode_graph6(encode_graph6(seven)) == seven
    assert decode_graph6(encode_graph6(c5)) == c5


@pytest.mark.parametrize(
    ("line", "offset"),
    [
        ("", 0),
        ("?", 0),
        ("A", 1),
        ("A ", 1),
        ("A~", 1),
        ("A_?", 2),
        (">>graph6<<B", 11),
    ],
)
def test_malformed_input_reports_offset(line: str, offset: int) -> None:
    """
    Test that malformed strings raise Graph6DecodeError with the byte offset.
    Why: Corpus files hold thousands of lines; the offset is what lets a user find
    the broken byte.
    """
    with pytest.raises(Graph6DecodeError) as excinfo:
        decode_graph6(line)
    assert excinfo.value.offset == offset
    assert f"at byte {offset}" in str(excinfo.value)


def test_file_round_trip(tmp_path: Path, k3: Graph, c4: Graph) -> None:
    """
    Test writing and reading a graph6 file with a blank line.
    Why: Sweeps read their corpus from files, and trailing blank lines are common in
    hand-edited inputs.
    """
    path = tmp_path / "corpus.g6"
    write_graph6_file(path, [k3, c4])
    with open(path, "a", encoding="ascii") as f:
        f.write("\n")
    assert list(read_graph6_file(path)) == [k3, c4]


def test_file_error_is_raised(tmp_path: Path) -> None:
    """
    Test that a bad line inside a file propagates its decode error.
    Why: Skipping a corrupt line silently would shrink an exhaustive sweep without
    anyone noticing.
    """
    path = tmp_path / "bad.g6"
    path.write_text("A_\nA~\n", encoding="ascii")
    with pytest.raises(Graph6DecodeError):
        list(read_graph6_file(path))
