"""Checkers comparing symbolic and ordinary powers as ideals."""

from edgeal.core.graphs import Graph
from edgeal.core.ideals import missing_generators
from edgeal.theorems.base import CheckReport, girth_gate, monomials_json, verdict
from edgeal.theorems.context import GraphContext


def check_cont(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """I^(s+1) ⊆ I^s whenever g has no odd cycle of length <= 2s - 3."""
    ctx = ctx or GraphContext(g)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    gate = girth_gate(ctx.odd_girth, 2 * s - 3)
    params = {"s": s}
    if not gate["holds"]:
        return CheckReport("cont", ctx.graph_id, g.n, "not_applicable", params, gate)
    outside = missing_generators(ctx.symbolic(s + 1), ctx.power(s))
    witness: dict[str, object] = {"symbolic_gens": len(ctx.symbolic(s + 1).gens)}
    if outside:
        witness["not_contained"] = monomials_json(outside)
    return CheckReport("cont", ctx.graph_id, g.n, verdict(not outside), params, gate, witness)


def check_bipartite_equality(g: Graph, s: int, ctx: GraphContext | None = None) -> CheckReport:
    """I^(s) = I^s for bipartite g."""
    ctx = ctx or GraphContext(g)
    gate = {"bipartite": ctx.bipartite}
    params = {"s": s}
    if not ctx.bipartite:
        return CheckReport("bipartite", ctx.graph_id, g.n, "not_applicable", params, gate)
    symbolic, ordinary = ctx.symbolic(s), ctx.power(s)
    holds = symbolic == ordinary
    witness: dict[str, object] = {"gens": len(symbolic.gens)}
    if not holds:
        witness["symbolic_not_in_power"] = monomials_json(missing_generators(symbolic, ordinary))
    return CheckReport("bipartite", ctx.graph_id, g.n, verdict(holds), params, gate, witness)


def check_rty(g: Graph, k: int, ctx: GraphContext | None = None) -> CheckReport:
    """I^(s) = I^s for every s <= k when g has no odd cycle of length <= 2k - 1."""
    ctx = ctx or GraphContext(g)
    gate = girth_gate(ctx.odd_girth, 2 * k - 1)
    params = {"k": k}
    if not gate["holds"]:
        return CheckReport("rty", ctx.graph_id, g.n, "not_applicable", params, gate)
    witness: dict[str, object] = {}
    holds = True
    for s in range(1, k + 1):
        missing = missing_generators(ctx.symbolic(s), ctx.power(s))
        witness[f"s={s}"] = "equal" if not missing else monomials_json(missing)
        holds = holds and not missing
    return CheckReport("rty", ctx.graph_id, g.n, verdict(holds), params, gate, witness)
