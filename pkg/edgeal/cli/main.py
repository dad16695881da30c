"""Command-line entry point: `edgeal compute|verify|encode|decode`."""

import argparse
import logging
import sqlite3
import sys
from collections.abc import Callable, Sequence

from pydantic import ValidationError

from edgeal.cli.commands import cmd_compute, cmd_decode, cmd_encode, cmd_verify
from edgeal.cli.config import RunConfig, default_log_level
from edgeal.theorems.registry import STATEMENTS
from edgeal.utils.logging import setup_logging

logger = logging.getLogger("edgeal.cli")

COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "decode": cmd_decode,
}


def parse_s_range(text: str) -> tuple[int, int]:
    """Parse "2" or "1..3" (also "1-3") into (s_min, s_max)."""
    for sep in ("..", "-"):
        if sep in text:
            low, high = text.split(sep, 1)
            try:
                return int(low), int(high)
            except ValueError as e:
                raise argparse.ArgumentTypeError(f"bad s range {text!r}") from e
    try:
        s = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad s value {text!r}") from e
    return s, s


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input (exactly one)")
    group.add_argument("--exhaustive", type=int, metavar="N", help="all graphs on N vertices")
    group.add_argument("--graph6", metavar="FILE|STRING", help="graph6 file or a single line")
    group.add_argument("--edges", metavar="LIST", help='inline edges, e.g. "1 2, 2 3"')
    group.add_argument("--edge-file", metavar="PATH", help="edge-list file")
    group.add_argument(
        "--builtin",
        "--graph",
        dest="builtin",
        metavar="NAME",
        help="builtin family: cycle:5, path:3, complete:4, complete_bipartite:2,3, example42, "
        "or shorthand C5, P3, K4, K2,3",
    )
    group.add_argument("--vertices", type=int, help="vertex count for --edges")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeal",
        description="Exact symbolic powers, regularity and statement checks for edge ideals.",
    )
    parser.add_argument("--log-level", default=default_log_level(), help="default INFO")
    parser.add_argument("--log-dir", default=None, help="also write a timestamped log file here")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="regularities and flags for each graph")
    verify = sub.add_parser("verify", help="run statement checkers over a corpus")
    encode = sub.add_parser("encode", help="print graph6 lines for the input graphs")
    decode = sub.add_parser("decode", help="print the edges of graph6 input as JSON lines")

    for p in (compute, verify, encode, decode):
        _add_input_options(p)
        p.add_argument("--out", help="output file (default standard output)")

    for p in (compute, verify):
        p.add_argument("--s", type=parse_s_range, default=(1, 2), metavar="MIN..MAX")
        p.add_argument("--timeout", type=float, default=60.0, help="seconds per instance")
        p.add_argument("--char", type=int, default=0, dest="characteristic")
        p.add_argument("--no-cache", action="store_true", help="skip the persistent cache")

    compute.add_argument("--betti", action="store_true", help="include the Betti table of I")
    verify.add_argument(
        "--statements",
        help=f"comma-separated ids (default all): {', '.join(STATEMENTS)}",
    )
    verify.add_argument("--jobs", type=int, default=1, help="graphs checked in parallel")
    verify.add_argument("--explore", action="store_true", help="also try fococh at s = 5")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    s_min, s_max = getattr(args, "s", (1, 2))
    raw = getattr(args, "statements", None) or ""
    statements = tuple(s.strip() for s in raw.split(",") if s.strip())
    return RunConfig(
        exhaustive=args.exhaustive,
        graph6=args.graph6,
        edges=args.edges,
        edge_file=args.edge_file,
        builtin=args.builtin,
        vertices=args.vertices,
        s_min=s_min,
        s_max=s_max,
        statements=statements,
        timeout=getattr(args, "timeout", 60.0),
        jobs=getattr(args, "jobs", 1),
        characteristic=getattr(args, "characteristic", 0),
        out=args.out,
        use_cache=not getattr(args, "no_cache", False),
        explore=getattr(args, "explore", False),
        betti=getattr(args, "betti", False),
        log_level=args.log_level,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        errors = "; ".join(
            f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}" for err in e.errors()
        )
        print(f"edgeal: invalid configuration: {errors}", file=sys.stderr)
        return 2

    setup_logging(getattr(logging, config.log_level), args.log_dir)
    try:
        return COMMANDS[args.command](config)
    except (OSError, ValueError, sqlite3.Error) as e:
        logger.error(f"{args.command} failed: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
