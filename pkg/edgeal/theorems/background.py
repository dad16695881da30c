"""Cited background results and the open regularity conjectures, checked as data."""

import logging
from typing import Any

from edgeal.core.graphs import Graph
from edgeal.core.types import Status
from edgeal.theorems.base import CheckReport, combine, verdict
from edgeal.theorems.context import GraphContext

logger = logging.getLogger(__name__)

CONJECTURES = {
    "conj1": "reg(I^s) <= 2s + reg(I) - 2",
    "conj2": "reg(I^s) = reg(I^(s))",
    "conj3": "reg(I^(s)) <= 2s + reg(I) - 2",
}


def _edgeless(statement: str, ctx: GraphContext, params: dict[str, Any]) -> CheckReport:
    return CheckReport(
        statement, ctx.graph_id, ctx.graph.n, "not_applicable", params, {"has_edges": False}
    )


def check_froberg(g: Graph, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I) = 2 exactly when the complement of g is chordal."""
    ctx = ctx or GraphContext(g)
    if not ctx.has_edges:
        return _edgeless("froberg", ctx, {})
    reg_i = ctx.reg_edge()
    witness = {"reg_edge_ideal": reg_i, "co_chordal": ctx.co_chordal}
    holds = (reg_i == 2) == ctx.co_chordal
    return CheckReport("froberg", ctx.graph_id, g.n, verdict(holds), {}, None, witness)


def check_bn_square(g: Graph, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^2) <= reg(I) + 2."""
    ctx = ctx or GraphContext(g)
    if not ctx.has_edges:
        return _edgeless("bn_square", ctx, {})
    reg_i, reg_sq = ctx.reg_edge(), ctx.reg_power(2)
    witness = {"reg_edge_ideal": reg_i, "reg_power": reg_sq, "bound": reg_i + 2}
    return CheckReport(
        "bn_square", ctx.graph_id, g.n, verdict(reg_sq <= reg_i + 2), {}, None, witness
    )


def check_hhz(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^s) = 2s when the complement of g is chordal."""
    ctx = ctx or GraphContext(g)
    params = {"s": s}
    gate = {"has_edges": ctx.has_edges, "co_chordal": ctx.co_chordal}
    if not (ctx.has_edges and ctx.co_chordal):
        return CheckReport("hhz", ctx.graph_id, g.n, "not_applicable", params, gate)
    value = ctx.reg_power(s)
    witness = {"reg_power": value, "expected": 2 * s}
    return CheckReport("hhz", ctx.graph_id, g.n, verdict(value == 2 * s), params, gate, witness)


def check_chordal_equality(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s)) = 2s + reg(I) - 2 for chordal g."""
    ctx = ctx or GraphContext(g)
    params = {"s": s}
    gate = {"has_edges": ctx.has_edges, "chordal": ctx.chordal}
    if not (ctx.has_edges and ctx.chordal):
        return CheckReport("chordal_eq", ctx.graph_id, g.n, "not_applicable", params, gate)
    value = ctx.reg_symbolic(s)
    expected = 2 * s + ctx.reg_edge() - 2
    witness = {"reg_symbolic": value, "expected": expected}
    status = verdict(value == expected)
    return CheckReport("chordal_eq", ctx.graph_id, g.n, status, params, gate, witness)


def survey_conjectures(g: Graph, s_max: int, ctx: GraphContext | None = None) -> CheckReport:
    """Each open conjecture on every s <= s_max, with a verdict per conjecture.

    A failing instance is a potential counterexample and is logged at WARNING.
    """
    ctx = ctx or GraphContext(g)
    params = {"s_max": s_max}
    if not ctx.has_edges:
        return _edgeless("survey", ctx, params)
    reg_i = ctx.reg_edge()
    rows: dict[str, dict[str, Any]] = {}
    outcomes: dict[str, list[Status]] = {name: [] for name in CONJECTURES}
    for s in range(1, s_max + 1):
        ordinary, symbolic = ctx.reg_power(s), ctx.reg_symbolic(s)
        bound = 2 * s + reg_i - 2
        rows[f"s={s}"] = {"reg_power": ordinary, "reg_symbolic": symbolic, "bound": bound}
        outcomes["conj1"].append(verdict(ordinary <= bound))
        outcomes["conj2"].append(verdict(ordinary == symbolic))
        outcomes["conj3"].append(verdict(symbolic <= bound))
    verdicts = {name: combine(statuses) for name, statuses in outcomes.items()}
    for name, status in verdicts.items():
        if status == "fail":
            logger.warning(
                f"Potential counterexample to {name} ({CONJECTURES[name]}) on {ctx.graph_id}"
            )
    witness = {"reg_edge_ideal": reg_i, "conjectures": verdicts, **rows}
    status = combine(list(verdicts.values()))
    return CheckReport("survey", ctx.graph_id, g.n, status, params, None, witness)
