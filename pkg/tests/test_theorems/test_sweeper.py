import logging
from pathlib import Path

import pytest

from edgeal.core.graphs import Graph, enumerate_graphs
from edgeal.data.graph6 import encode_graph6
from edgeal.data.sqlite import SQLiteResultCache
from edgeal.theorems.base import CheckReport
from edgeal.theorems.registry import STATEMENTS, Statement, SweepRange
from edgeal.theorems.sweeper import SweepOptions, Sweeper, check_graph
from tests.conftest import MemoryResultCache


def test_check_graph_runs_every_instance(c5: Graph) -> None:
    """
    Test one graph against two statements.
    Why: Every edge of C5 is a seccol instance and twth has one; each report carries
    the labeled graph6 so edge parameters can be read back.
    """
    reports = check_graph(c5, SweepOptions(("seccol", "twth")))
    assert [r.statement for r in reports] == ["seccol"] * 5 + ["twth"]
    assert all(r.status == "pass" for r in reports)
    assert {r.graph6 for r in reports} == {encode_graph6(c5)}


def test_check_graph_uses_the_result_cache(c5: Graph, memory_cache: MemoryResultCache) -> None:
    """
    Test that a second run reads regularities from the cache.
    Why: The cache is what makes repeated sweeps cheap; a second run must hit for
    every invariant regularity and write nothing new.
    """
    options = SweepOptions(("twth",))
    first = check_graph(c5, options, memory_cache)
    writes = memory_cache.writes
    assert writes == 3
    second = check_graph(c5, options, memory_cache)
    assert memory_cache.writes == writes
    assert memory_cache.hits == 3
    assert [r.witness for r in first] == [r.witness for r in second]


def test_timeout_becomes_a_report(c5: Graph) -> None:
    """
    Test that an instance exceeding its timeout yields status timeout.
    Why: Heavy instances must never crash a sweep; they are reported with their
    parameters and the sweep moves on.
    """
    options = SweepOptions(("twth", "rfirst"), SweepRange(1, 1), timeout=1e-9)
    reports = check_graph(c5, options)
    assert [r.status for r in reports] == ["timeout", "timeout"]
    assert reports[1].params == {"s": 1}
    assert reports[0].witness == {}


def test_failures_are_logged(
    k3: Graph, monkeypatch: pytest.MonkeyPatch, caplog: pytest.LogCaptureFixture
) -> None:
    """
    Test that a fail is logged at WARNING with its witness.
    Why: A fail is a potential counterexample; it must be impossible to miss in the
    logs of a long sweep.
    """

    def always_fails(g: Graph, **_: object) -> CheckReport:
        return CheckReport("broken", "id", g.n, "fail", {}, None, {"lhs": 1, "rhs": 0})

    broken = Statement("broken", "always fails", always_fails, lambda g, r: [{}])
    monkeypatch.setitem(STATEMENTS, "broken", broken)
    with caplog.at_level(logging.WARNING, logger="edgeal.sweeper.broken"):
        reports = check_graph(k3, SweepOptions(("broken",)))
    assert reports[0].status == "fail"
    assert "FAIL" in caplog.text
    assert "'lhs': 1" in caplog.text


@pytest.mark.asyncio
async def test_sweeper_sorts_reports() -> None:
    """
    Test a threaded sweep over every graph on three vertices.
    Why: Reports finish in arbitrary order; the output must be sorted by graph id so
    that two runs produce identical files.
    """
    graphs = list(enumerate_graphs(3))
    sweeper = Sweeper(SweepOptions(("froberg", "cont"), SweepRange(1, 2)))
    reports = await sweeper.run(graphs, jobs=1)
    assert len(reports) == len(graphs) * 3
    assert reports == sorted(reports, key=lambda r: r.sort_key)


@pytest.mark.asyncio
async def test_sweeper_with_process_pool(tmp_path: Path) -> None:
    """
    Test a process-pool sweep that writes to an SQLite cache by path.
    Why: Workers rebuild graphs from graph6 and open their own cache connection; the
    reports must match a single-process run and the values must land on disk.
    """
    graphs = list(enumerate_graphs(4))
    options = SweepOptions(("froberg",))
    path = str(tmp_path / "results.db")
    parallel = await Sweeper(options, cache_path=path).run(graphs, jobs=2)
    serial = await Sweeper(options).run(graphs, jobs=1)
    assert [(r.graph_id, r.status) for r in parallel] == [(r.graph_id, r.status) for r in serial]
    cache = SQLiteResultCache(path)
    assert cache.stats().entries == sum(1 for g in graphs if g.edge_count)
    cache.close()


@pytest.mark.asyncio
async def test_sweeper_empty_corpus() -> None:
    """
    Test that an empty corpus returns no reports.
    Why: A filter that matches nothing is a normal outcome, not an error.
    """
    assert await Sweeper(SweepOptions(("twth",))).run([]) == []
