"""Report type shared by every checker, plus rendering helpers for witnesses."""

import math
from dataclasses import dataclass, field
from typing import Any

from edgeal.core.graphs import Graph
from edgeal.core.ideals import Monomial
from edgeal.core.types import Edge, Status


@dataclass
class CheckReport:
    """Outcome of one statement on one graph and parameter choice.

    `hypothesis` records how a statement's gate evaluated, so a not_applicable
    verdict can be told apart from a vacuous pass. A fail carries both sides of the
    claim in `witness`. `graph6` is the input labeling, filled in by the sweeper so
    that edge parameters can be read against it.
    """

    statement: str
    graph_id: str
    n: int
    status: Status
    params: dict[str, Any] = field(default_factory=dict)
    hypothesis: dict[str, Any] | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    graph6: str | None = None

    @property
    def sort_key(self) -> tuple[str, str, str, str]:
        params = repr(sorted(self.params.items()))
        return self.graph_id, self.statement, params, self.graph6 or ""


def verdict(holds: bool) -> Status:
    return "pass" if holds else "fail"


def combine(statuses: list[Status]) -> Status:
    """fail beats pass; an empty list of applicable instances is not_applicable."""
    if not statuses:
        return "not_applicable"
    if "fail" in statuses:
        return "fail"
    return "pass"


def edge_json(e: Edge) -> list[int]:
    return [e[0] + 1, e[1] + 1]


def girth_json(value: int | float) -> int | None:
    return None if value == math.inf else int(value)


def monomials_json(ms: list[Monomial]) -> list[str]:
    return [str(m) for m in ms]


def edge_product(g: Graph, edges: tuple[Edge, ...]) -> Monomial:
    u = Monomial.one(g.n)
    for a, b in edges:
        u = u * Monomial.edge(g.n, a, b)
    return u


def girth_gate(odd_girth: int | float, bound: int) -> dict[str, Any]:
    """Hypothesis "no odd cycle of length at most `bound`"."""
    return {
        "odd_girth": girth_json(odd_girth),
        "required": f"> {bound}",
        "holds": odd_girth > bound,
    }
