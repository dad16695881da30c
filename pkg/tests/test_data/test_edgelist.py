from pathlib import Path

import pytest

from edgeal.core.graphs import Graph
from edgeal.data.edgelist import (
    parse_edge_list,
    parse_inline_edges,
    read_edge_list,
    render_edge_list,
)


def test_parse_edge_list_with_comments(c4: Graph) -> None:
    """
    Test the vertex-count-then-pairs text format.
    Why: Edge files are written by hand; comments and blank lines must not shift
    the line numbers reported in errors or change the graph.
    """
    text = "# square\n4\n\n1 2\n2 3  # middle\n3 4\n4 1\n"
    assert parse_edge_list(text) == c4
    assert parse_edge_list(render_edge_list(c4)) == c4


def test_render_is_one_based(k3: Graph) -> None:
    """
    Test the rendered text of K3.
    Why: Every user-facing vertex label is 1-based while the engine is 0-based.
    """
    assert render_edge_list(k3) == "3\n1 2\n1 3\n2 3\n"


@pytest.mark.parametrize(
    ("text", "match"),
    [
        ("", "empty"),
        ("three\n1 2\n", "line 1"),
        ("3\n1 2 3\n", "line 2"),
        ("3\n1 x\n", "integers"),
        ("3\n0 1\n", "numbered from 1"),
        ("3\n1 4\n", "outside"),
    ],
)
def test_parse_edge_list_errors(text: str, match: str) -> None:
    """
    Test that malformed edge lists raise ValueError naming the problem.
    Why: A CLI user gets these messages verbatim; they must point at the line.
    """
    with pytest.raises(ValueError, match=match):
        parse_edge_list(text)


def test_inline_edges(p3: Graph) -> None:
    """
    Test the --edges shorthand.
    Why: Quick checks use "1 2, 2 3" or "1-2;2-3" on the command line, with the
    vertex count taken from the largest label unless given.
    """
    assert parse_inline_edges("1 2, 2 3") == p3
    assert parse_inline_edges("1-2;2-3") == p3
    assert parse_inline_edges("1 2", n=4).n == 4
    assert parse_inline_edges("").edge_count == 0
    with pytest.raises(ValueError, match="n=2"):
        parse_inline_edges("1 3", n=2)


def test_read_edge_list(tmp_path: Path, k3: Graph) -> None:
    """
    Test reading an edge file from disk.
    Why: --edge-file goes through this path.
    """
    path = tmp_path / "k3.txt"
    path.write_text(render_edge_list(k3), encoding="utf-8")
    assert read_edge_list(path) == k3
