import asyncio
import json
import logging
import os
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

import pandas as pd

from edgeal.cli.config import RunConfig
from edgeal.cli.corpus import load_graphs
from edgeal.core.betti import betti_table
from edgeal.core.errors import ComputationTimeout
from edgeal.core.graphs import Graph
from edgeal.data.graph6 import encode_graph6
from edgeal.data.sqlite import CACHE_FILE, SQLiteResultCache, default_cache_dir
from edgeal.schemas import (
    BettiEntryRecord,
    CheckRecord,
    ComputeRecord,
    PowerRecord,
    SummaryRow,
    dump_record,
)
from edgeal.theorems.base import CheckReport, edge_json, girth_json
from edgeal.theorems.context import GraphContext
from edgeal.theorems.registry import STATEMENTS
from edgeal.theorems.sweeper import Sweeper, SweepOptions

logger = logging.getLogger(__name__)

STATUSES = ["pass", "fail", "not_applicable", "timeout"]


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as f:
        yield f
    logger.info(f"Report written to {path}")


def _cache_path(config: RunConfig) -> str | None:
    if not config.use_cache:
        return None
    cache_dir = default_cache_dir()
    os.makedirs(cache_dir, exist_ok=True)
    return os.path.join(cache_dir, CACHE_FILE)


def compute_record(g: Graph, config: RunConfig, ctx: GraphContext) -> ComputeRecord:
    """Regularities, generator counts and graph flags of one graph.

    A timeout keeps the graph flags and drops the partial regularities.
    """
    record = ComputeRecord(
        graph_id=ctx.graph_id,
        n=g.n,
        edges=[edge_json(e) for e in g.edges()],
        zero_ideal=not ctx.has_edges,
        gens_edge=len(ctx.edge_ideal.gens),
        odd_girth=girth_json(ctx.odd_girth),
        bipartite=ctx.bipartite,
        chordal=ctx.chordal,
        co_chordal=ctx.co_chordal,
        gap_free=ctx.gap_free,
        characteristic=config.characteristic,
    )
    if not ctx.has_edges:
        return record
    try:
        record.reg_edge = ctx.reg_edge()
        for s in range(config.s_min, config.s_max + 1):
            ordinary, symbolic = ctx.power(s), ctx.symbolic(s)
            record.powers.append(
                PowerRecord(
                    s=s,
                    reg_power=ctx.reg_power(s),
                    reg_symbolic=ctx.reg_symbolic(s),
                    gens_power=len(ordinary.gens),
                    gens_symbolic=len(symbolic.gens),
                    equal=ordinary == symbolic,
                )
            )
        if config.betti:
            table = betti_table(ctx.edge_ideal, config.characteristic, ctx.deadline)
            record.betti = [BettiEntryRecord(**entry) for entry in table.to_json()]
    except ComputationTimeout as e:
        logger.warning(f"Timeout computing {ctx.graph_id}: {e}")
        record.status = "timeout"
        record.reg_edge = None
        record.powers = []
        record.betti = None
    return record


def cmd_compute(config: RunConfig) -> int:
    graphs = load_graphs(config)
    cache_path = _cache_path(config)
    cache = SQLiteResultCache(cache_path) if cache_path else None
    timeouts = 0
    with _output(config.out) as out:
        for g in graphs:
            ctx = GraphContext(g, characteristic=config.characteristic, cache=cache)
            ctx.deadline = time.monotonic() + config.timeout
            record = compute_record(g, config, ctx)
            if record.status == "timeout":
                timeouts += 1
            out.write(dump_record(record) + "\n")
    if cache is not None:
        logger.info(f"Result cache: {cache.stats()}")
        cache.close()
    logger.info(f"Computed {len(graphs)} graphs ({timeouts} timeouts)")
    return 0


def summarize(reports: list[CheckReport]) -> pd.DataFrame:
    """Counts of each status per statement."""
    frame = pd.DataFrame([{"statement": r.statement, "status": r.status} for r in reports])
    if frame.empty:
        return pd.DataFrame(columns=STATUSES)
    table = pd.crosstab(frame["statement"], frame["status"])
    return table.reindex(columns=STATUSES, fill_value=0)


def summary_rows(table: pd.DataFrame) -> list[SummaryRow]:
    return [
        SummaryRow.model_validate({"statement": statement, **{k: int(v) for k, v in row.items()}})
        for statement, row in table.iterrows()
    ]


def cmd_verify(config: RunConfig) -> int:
    """Run the selected checkers; exit 1 if any instance fails."""
    graphs = load_graphs(config)
    statements = config.statements or tuple(STATEMENTS)
    options = SweepOptions(
        statements=statements,
        sweep_range=config.sweep_range,
        timeout=config.timeout,
        characteristic=config.characteristic,
    )
    cache_path = _cache_path(config)
    cache = SQLiteResultCache(cache_path) if cache_path and config.jobs == 1 else None
    sweeper = Sweeper(options, cache=cache, cache_path=cache_path)
    reports = asyncio.run(sweeper.run(graphs, jobs=config.jobs))

    with _output(config.out) as out:
        for report in reports:
            out.write(dump_record(CheckRecord.model_validate(report)) + "\n")

    table = summarize(reports)
    print(table.to_string(), file=sys.stderr)
    if cache is not None:
        logger.info(f"Result cache: {cache.stats()}")
        cache.close()

    failures = int(table["fail"].sum()) if not table.empty else 0
    if failures:
        logger.warning(f"{failures} failing instances; see the report for witnesses")
        return 1
    return 0


def cmd_encode(config: RunConfig) -> int:
    with _output(config.out) as out:
        for g in load_graphs(config):
            out.write(encode_graph6(g) + "\n")
    return 0


def cmd_decode(config: RunConfig) -> int:
    with _output(config.out) as out:
        for g in load_graphs(config):
            line = {
                "graph6": encode_graph6(g),
                "n": g.n,
                "edges": [edge_json(e) for e in g.edges()],
            }
            out.write(json.dumps(line, sort_keys=True, separators=(",", ":")) + "\n")
    return 0
