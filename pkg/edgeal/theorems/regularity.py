"""Checkers for the regularity bounds on symbolic powers.

Colon ideals that turn out to be the unit ideal contribute nothing to a bound
(S/S has no resolution); they are rendered as "(1)" with regularity null.
"""

import logging
from typing import Any

from edgeal.core.errors import ComputationTimeout
from edgeal.core.graphs import Graph
from edgeal.core.ideals import colon_by_monomial
from edgeal.core.types import Edge, Status
from edgeal.theorems.base import (
    CheckReport,
    combine,
    edge_json,
    edge_product,
    girth_gate,
    verdict,
)
from edgeal.theorems.context import GraphContext

logger = logging.getLogger(__name__)


def _no_edges(statement: str, ctx: GraphContext, params: dict[str, Any]) -> CheckReport:
    return CheckReport(
        statement, ctx.graph_id, ctx.graph.n, "not_applicable", params, {"has_edges": False}
    )


def check_rfirst(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s+1)) <= max{reg(I^(s+1) : u) + 2s over u in G(I^s), reg(I^(s+1) + I^s)}."""
    ctx = ctx or GraphContext(g)
    params = {"s": s}
    if not ctx.has_edges:
        return _no_edges("rfirst", ctx, params)
    lhs = ctx.reg_symbolic(s + 1)
    colon_regs = []
    unit_colons = 0
    for u in ctx.power(s).gens:
        r = ctx.reg(colon_by_monomial(ctx.symbolic(s + 1), u))
        if r is None:
            unit_colons += 1
        else:
            colon_regs.append(r)
    logger.debug(f"rfirst {ctx.graph_id} s={s}: {unit_colons} unit colons")
    mixed = ctx.reg_mixed(s)
    bound = max([mixed] + [r + 2 * s for r in colon_regs])
    witness = {
        "reg_symbolic": lhs,
        "reg_symbolic_plus_power": mixed,
        "max_colon_reg": max(colon_regs, default=None),
        "colons": len(colon_regs) + unit_colons,
        "unit_colons": unit_colons,
        "bound": bound,
    }
    return CheckReport("rfirst", ctx.graph_id, g.n, verdict(lhs <= bound), params, None, witness)


def check_base(g: Graph, e: Edge, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(2) : e) <= reg(I)."""
    ctx = ctx or GraphContext(g)
    e = ctx.require_edge(e)
    colon = colon_by_monomial(ctx.symbolic(2), edge_product(g, (e,)))
    lhs = ctx.reg(colon)
    rhs = ctx.reg_edge()
    witness = {"colon": str(colon), "reg_colon": lhs, "reg_edge_ideal": rhs}
    holds = lhs is None or lhs <= rhs
    return CheckReport(
        "base", ctx.graph_id, g.n, verdict(holds), {"e": edge_json(e)}, None, witness
    )


def check_lemreg(
    g: Graph, edges: tuple[Edge, ...], ctx: GraphContext | None = None
) -> CheckReport:
    """reg(I^(s+1) : e_1 ... e_s) <= reg(I)."""
    ctx = ctx or GraphContext(g)
    if not edges:
        raise ValueError("check_lemreg needs at least one edge")
    edges = tuple(ctx.require_edge(e) for e in edges)
    colon = colon_by_monomial(ctx.symbolic(len(edges) + 1), edge_product(g, edges))
    lhs = ctx.reg(colon)
    rhs = ctx.reg_edge()
    witness = {"colon": str(colon), "reg_colon": lhs, "reg_edge_ideal": rhs}
    holds = lhs is None or lhs <= rhs
    params = {"u": [edge_json(e) for e in edges]}
    return CheckReport("lemreg", ctx.graph_id, g.n, verdict(holds), params, None, witness)


def check_1main(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s+1)) <= max{reg(I) + 2s, reg(I^(s+1) + I^s)}."""
    ctx = ctx or GraphContext(g)
    params = {"s": s}
    if not ctx.has_edges:
        return _no_edges("1main", ctx, params)
    lhs = ctx.reg_symbolic(s + 1)
    reg_i = ctx.reg_edge()
    mixed = ctx.reg_mixed(s)
    bound = max(reg_i + 2 * s, mixed)
    witness = {
        "reg_symbolic": lhs,
        "reg_edge_ideal": reg_i,
        "reg_symbolic_plus_power": mixed,
        "bound": bound,
    }
    return CheckReport("1main", ctx.graph_id, g.n, verdict(lhs <= bound), params, None, witness)


def check_2main(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s+1)) <= max{reg(I) + 2s, reg(I^s)} without odd cycles of length <= 2s - 3."""
    ctx = ctx or GraphContext(g)
    params = {"s": s}
    if not ctx.has_edges:
        return _no_edges("2main", ctx, params)
    gate = girth_gate(ctx.odd_girth, 2 * s - 3)
    if not gate["holds"]:
        return CheckReport("2main", ctx.graph_id, g.n, "not_applicable", params, gate)
    lhs = ctx.reg_symbolic(s + 1)
    reg_i = ctx.reg_edge()
    reg_pow = ctx.reg_power(s)
    bound = max(reg_i + 2 * s, reg_pow)
    witness = {"reg_symbolic": lhs, "reg_edge_ideal": reg_i, "reg_power": reg_pow, "bound": bound}
    return CheckReport("2main", ctx.graph_id, g.n, verdict(lhs <= bound), params, gate, witness)


def check_twth(g: Graph, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(2)) <= reg(I) + 2 and reg(I^(3)) <= reg(I) + 4."""
    ctx = ctx or GraphContext(g)
    if not ctx.has_edges:
        return _no_edges("twth", ctx, {})
    reg_i = ctx.reg_edge()
    witness: dict[str, Any] = {"reg_edge_ideal": reg_i}
    statuses: list[Status] = []
    for part, s in (("i", 2), ("ii", 3)):
        value = ctx.reg_symbolic(s)
        witness[part] = {"s": s, "reg_symbolic": value, "bound": reg_i + 2 * s - 2}
        statuses.append(verdict(value <= reg_i + 2 * s - 2))
    return CheckReport("twth", ctx.graph_id, g.n, combine(statuses), {}, None, witness)


def _bounded_sweep(
    ctx: GraphContext, statement: str, k: int, top: int, symbolic: bool
) -> CheckReport:
    params = {"k": k}
    if not ctx.has_edges:
        return _no_edges(statement, ctx, params)
    gate = girth_gate(ctx.odd_girth, 2 * k - 1)
    if not gate["holds"]:
        return CheckReport(statement, ctx.graph_id, ctx.graph.n, "not_applicable", params, gate)
    reg_i = ctx.reg_edge()
    witness: dict[str, Any] = {"reg_edge_ideal": reg_i}
    statuses: list[Status] = []
    for s in range(1, top + 1):
        value = ctx.reg_symbolic(s) if symbolic else ctx.reg_power(s)
        witness[f"s={s}"] = {"reg": value, "bound": 2 * s + reg_i - 2}
        statuses.append(verdict(value <= 2 * s + reg_i - 2))
    status = combine(statuses)
    return CheckReport(statement, ctx.graph_id, ctx.graph.n, status, params, gate, witness)


def check_regord(g: Graph, k: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^s) <= 2s + reg(I) - 2 for s <= k without odd cycles of length <= 2k - 1."""
    return _bounded_sweep(ctx or GraphContext(g), "regord", k, k, symbolic=False)


def check_resycy(g: Graph, k: int, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s)) <= 2s + reg(I) - 2 for s <= k + 1 without odd cycles of length <= 2k - 1."""
    return _bounded_sweep(ctx or GraphContext(g), "resycy", k, k + 1, symbolic=True)


def check_fococh(g: Graph, explore: bool = False, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(s)) = 2s for s = 2, 3, 4 when the complement of g is chordal.

    With `explore`, s = 5 is also computed and reported under "exploration"; that
    value never affects the status.
    """
    ctx = ctx or GraphContext(g)
    params = {"explore": explore} if explore else {}
    gate = {"has_edges": ctx.has_edges, "co_chordal": ctx.co_chordal}
    if not (ctx.has_edges and ctx.co_chordal):
        return CheckReport("fococh", ctx.graph_id, g.n, "not_applicable", params, gate)
    witness: dict[str, Any] = {}
    statuses: list[Status] = []
    for s in (2, 3, 4):
        value = ctx.reg_symbolic(s)
        witness[f"s={s}"] = value
        statuses.append(verdict(value == 2 * s))
    if explore:
        try:
            value = ctx.reg_symbolic(5)
            witness["exploration"] = {"s": 5, "reg_symbolic": value, "equals_2s": value == 10}
        except ComputationTimeout:
            witness["exploration"] = {"s": 5, "status": "timeout"}
    return CheckReport("fococh", ctx.graph_id, g.n, combine(statuses), params, gate, witness)


def check_fococh_sum(g: Graph, ctx: GraphContext | None = None) -> CheckReport:
    """reg(I^(4) + I^3) <= 6 when the complement of g is chordal."""
    ctx = ctx or GraphContext(g)
    gate = {"has_edges": ctx.has_edges, "co_chordal": ctx.co_chordal}
    if not (ctx.has_edges and ctx.co_chordal):
        return CheckReport("fococh_sum", ctx.graph_id, g.n, "not_applicable", {}, gate)
    value = ctx.reg_mixed(3)
    witness = {"reg_symbolic_plus_power": value, "bound": 6}
    return CheckReport("fococh_sum", ctx.graph_id, g.n, verdict(value <= 6), {}, gate, witness)
