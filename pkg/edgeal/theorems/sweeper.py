import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from edgeal.core.errors import ComputationTimeout
from edgeal.core.graphs import Graph
from edgeal.data.graph6 import decode_graph6, encode_graph6
from edgeal.data.protocols import ResultCache
from edgeal.data.sqlite import SQLiteResultCache
from edgeal.theorems.base import CheckReport
from edgeal.theorems.context import GraphContext
from edgeal.theorems.registry import SweepRange, get_statement, report_params

logger = logging.getLogger(__name__)

# One cache connection per worker process, keyed by database path.
_WORKER_CACHES: dict[str, SQLiteResultCache] = {}


@dataclass(frozen=True)
class SweepOptions:
    statements: tuple[str, ...]
    sweep_range: SweepRange = SweepRange()
    timeout: float | None = 60.0
    characteristic: int = 0


def _worker_cache(path: str | None) -> ResultCache | None:
    if path is None:
        return None
    if path not in _WORKER_CACHES:
        logger.debug(f"Worker opening result cache {path}")
        _WORKER_CACHES[path] = SQLiteResultCache(path)
    return _WORKER_CACHES[path]


def check_graph(
    g: Graph, options: SweepOptions, cache: ResultCache | None = None
) -> list[CheckReport]:
    """Run every selected statement instance on one graph, sequentially.

    The instances share one GraphContext, so ideals and regularities computed for
    one statement are reused by the next. Each instance gets a fresh deadline.
    """
    ctx = GraphContext(g, characteristic=options.characteristic, cache=cache)
    labeled = encode_graph6(g)
    reports: list[CheckReport] = []
    for statement_id in options.statements:
        statement = get_statement(statement_id)
        st_logger = logging.getLogger(f"edgeal.sweeper.{statement_id}")
        for instance in statement.instances(g, options.sweep_range):
            if options.timeout is not None:
                ctx.deadline = time.monotonic() + options.timeout
            try:
                report = statement.run(g, instance, ctx=ctx)
            except ComputationTimeout as e:
                st_logger.warning(f"Timeout on {ctx.graph_id} {report_params(instance)}: {e}")
                report = CheckReport(
                    statement_id, ctx.graph_id, g.n, "timeout", report_params(instance)
                )
            if report.status == "fail":
                st_logger.warning(
                    f"FAIL on {ctx.graph_id} ({labeled}) {report.params}: {report.witness}"
                )
            report.graph6 = labeled
            reports.append(report)
    return reports


def _check_graph6(line: str, options: SweepOptions, cache_path: str | None) -> list[CheckReport]:
    return check_graph(decode_graph6(line), options, _worker_cache(cache_path))


class Sweeper:
    """Runs checkers over a corpus of graphs, in parallel across graphs."""

    def __init__(
        self,
        options: SweepOptions,
        cache: ResultCache | None = None,
        cache_path: str | None = None,
    ) -> None:
        self.options = options
        self.cache = cache
        self.cache_path = cache_path
        self.logger = logging.getLogger(f"edgeal.sweeper.{'+'.join(options.statements)}")

    async def run(self, graphs: list[Graph], jobs: int = 1) -> list[CheckReport]:
        """Check every graph; reports come back sorted by (graph id, statement, params)."""
        if not graphs:
            self.logger.info("No graphs to check.")
            return []

        self.logger.info(f"Checking {len(graphs)} graphs (jobs={jobs})")
        sem = asyncio.Semaphore(jobs)
        executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
        loop = asyncio.get_running_loop()

        async def sem_task(g: Graph) -> list[CheckReport]:
            async with sem:
                if executor is None:
                    return await asyncio.to_thread(check_graph, g, self.options, self.cache)
                call = partial(_check_graph6, encode_graph6(g), self.options, self.cache_path)
                return await loop.run_in_executor(executor, call)

        reports: list[CheckReport] = []
        try:
            tasks = [asyncio.create_task(sem_task(g)) for g in graphs]
            done = 0
            for coro in asyncio.as_completed(tasks):
                reports.extend(await coro)
                done += 1
                if done % 100 == 0 or done == len(graphs):
                    self.logger.info(f"Checked {done}/{len(graphs)} graphs")
        finally:
            if executor is not None:
                executor.shutdown()

        reports.sort(key=lambda r: r.sort_key)
        return reports

