"""Exhaustive acceptance sweeps over small graphs.

Each sweep names a statement set, a vertex bound and an s range; the script prints
one summary row per statement and exits 1 if any instance failed.
"""

import argparse
import asyncio
import json
import logging
import sys
from dataclasses import dataclass

from edgeal.cli.commands import summarize, summary_rows
from edgeal.core.graphs import enumerate_graphs
from edgeal.theorems import Sweeper, SweepOptions, SweepRange

logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
logger = logging.getLogger("run_acceptance")


@dataclass(frozen=True)
class Sweep:
    statements: tuple[str, ...]
    max_n: int
    sweep_range: SweepRange = SweepRange(1, 1)


SWEEPS = {
    "seccol": Sweep(("seccol",), 6),
    "col": Sweep(("col",), 5, SweepRange(2, 2)),
    "cont": Sweep(("cont",), 6, SweepRange(1, 4)),
    "twth": Sweep(("twth",), 6),
    "fococh": Sweep(("fococh", "fococh_sum"), 5),
    "froberg": Sweep(("froberg",), 6),
    "bipartite": Sweep(("bipartite",), 6, SweepRange(1, 3)),
    "rty": Sweep(("rty",), 6, SweepRange(1, 3)),
    "survey": Sweep(("survey",), 5, SweepRange(1, 3)),
}


async def run_sweep(name: str, jobs: int, timeout: float) -> int:
    sweep = SWEEPS[name]
    graphs = [g for n in range(1, sweep.max_n + 1) for g in enumerate_graphs(n)]
    options = SweepOptions(sweep.statements, sweep.sweep_range, timeout=timeout)
    reports = await Sweeper(options).run(graphs, jobs=jobs)
    rows = summary_rows(summarize(reports))
    for row in rows:
        logger.info(f"{name}: {json.dumps(row.model_dump(by_alias=True), sort_keys=True)}")
    return sum(row.failed for row in rows)


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the exhaustive acceptance sweeps.")
    parser.add_argument("sweeps", nargs="*", default=list(SWEEPS), choices=list(SWEEPS))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--timeout", type=float, default=60.0)
    args = parser.parse_args()

    failures = 0
    for name in args.sweeps:
        logger.info(f"Starting sweep {name}...")
        failures += asyncio.run(run_sweep(name, args.jobs, args.timeout))
    if failures:
        logger.error(f"{failures} failing instances")
        return 1
    logger.info("All sweeps passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
