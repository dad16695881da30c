from .base import CheckReport
from .context import GraphContext, graph_id
from .registry import STATEMENTS, Statement, SweepRange, get_statement
from .sweeper import Sweeper, SweepOptions, check_graph

__all__ = [
    "STATEMENTS",
    "CheckReport",
    "GraphContext",
    "Statement",
    "SweepOptions",
    "SweepRange",
    "Sweeper",
    "check_graph",
    "get_statement",
    "graph_id",
]
