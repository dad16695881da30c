import logging

import pytest

from edgeal.core.graphs import Graph, enumerate_graphs
from edgeal.theorems.background import (
    CONJECTURES,
    check_bn_square,
    check_chordal_equality,
    check_froberg,
    check_hhz,
    survey_conjectures,
)
from edgeal.theorems.context import GraphContext


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_froberg_on_all_small_graphs(n: int) -> None:
    """
    Test reg(I) = 2 exactly for co-chordal graphs, n <= 5.
    Why: The equivalence ties the Betti engine to a purely graph-theoretic test; a
    disagreement means one of the two is wrong.
    """
    for g in enumerate_graphs(n):
        report = check_froberg(g)
        if g.edge_count:
            assert report.status == "pass", report.witness
        else:
            assert report.status == "not_applicable"


def test_bn_square_and_hhz(c4: Graph, c5: Graph) -> None:
    """
    Test reg(I^2) <= reg(I) + 2 and reg(I^s) = 2s for co-chordal graphs.
    Why: Both are cited results that the symbolic bounds reduce to when symbolic and
    ordinary powers agree.
    """
    report = check_bn_square(c5)
    assert report.status == "pass"
    assert report.witness["bound"] == 5
    assert check_hhz(c4, 2).status == "pass"
    assert check_hhz(c4, 2).witness == {"reg_power": 4, "expected": 4}
    gated = check_hhz(c5, 2)
    assert gated.status == "not_applicable"
    assert gated.hypothesis == {"has_edges": True, "co_chordal": False}


def test_chordal_equality(k3: Graph, p3: Graph, c4: Graph) -> None:
    """
    Test reg(I^(s)) = 2s + reg(I) - 2 on chordal graphs and the gate on C4.
    Why: Chordal graphs are the one family where the symbolic regularity is known
    exactly; a wrong symbolic power shows up as an off-by-one here.
    """
    for g in (k3, p3):
        for s in (1, 2, 3):
            report = check_chordal_equality(g, s)
            assert report.statement == "chordal_eq"
            assert report.status == "pass"
    assert check_chordal_equality(c4, 2).status == "not_applicable"


def test_survey_pentagon(c5: Graph) -> None:
    """
    Test the conjecture survey on C5 for s <= 2.
    Why: Every conjecture is known for these values; the report has one verdict per
    conjecture and one row of regularities per s.
    """
    report = survey_conjectures(c5, 2)
    assert report.status == "pass"
    assert report.params == {"s_max": 2}
    assert report.witness["conjectures"] == {name: "pass" for name in CONJECTURES}
    assert report.witness["s=1"] == {"reg_power": 3, "reg_symbolic": 3, "bound": 3}
    assert set(report.witness) == {"reg_edge_ideal", "conjectures", "s=1", "s=2"}


def test_survey_on_all_small_graphs(caplog: pytest.LogCaptureFixture) -> None:
    """
    Test the survey on every graph with four vertices, s <= 3.
    Why: The conjectures are proven in this range; a fail here would be logged as a
    potential counterexample, and none may appear.
    """
    with caplog.at_level(logging.WARNING, logger="edgeal.theorems.background"):
        for g in enumerate_graphs(4):
            report = survey_conjectures(g, 3, GraphContext(g))
            assert report.status in ("pass", "not_applicable")
    assert "Potential counterexample" not in caplog.text


def test_survey_bipartite_powers_agree(c4: Graph) -> None:
    """
    Test that the second conjecture is trivial on a bipartite graph.
    Why: I^(s) = I^s for bipartite graphs, so the two regularities must agree row by
    row.
    """
    report = survey_conjectures(c4, 3)
    for s in (1, 2, 3):
        row = report.witness[f"s={s}"]
        assert row["reg_power"] == row["reg_symbolic"] == 2 * s
