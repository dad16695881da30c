"""Statement ids, their checkers, and the parameter instances a sweep runs."""

from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any

from edgeal.core.graphs import Graph
from edgeal.core.ideals import Monomial
from edgeal.theorems import background, colon, containment, regularity
from edgeal.theorems.base import CheckReport, edge_json, edge_product

Instance = dict[str, Any]


@dataclass(frozen=True)
class SweepRange:
    s_min: int = 1
    s_max: int = 2
    explore: bool = False

    @property
    def values(self) -> range:
        return range(self.s_min, self.s_max + 1)


@dataclass(frozen=True)
class Statement:
    id: str
    description: str
    checker: Callable[..., CheckReport]
    instances: Callable[[Graph, SweepRange], list[Instance]]

    def run(self, g: Graph, instance: Instance, **kwargs: Any) -> CheckReport:
        return self.checker(g, **instance, **kwargs)


def report_params(instance: Instance) -> dict[str, Any]:
    """Render checker arguments the way reports show them (1-based edges)."""
    params: dict[str, Any] = {}
    for name, value in instance.items():
        if name == "e":
            params["e"] = edge_json(value)
        elif name == "edges":
            params["u"] = [edge_json(e) for e in value]
        elif name == "explore" and not value:
            continue
        else:
            params[name] = value
    return params


def _per_edge(g: Graph, _: SweepRange) -> list[Instance]:
    return [{"e": e} for e in g.edges()]


def _edge_multisets(g: Graph, r: SweepRange) -> list[Instance]:
    return [
        {"edges": combo}
        for s in r.values
        for combo in combinations_with_replacement(g.edges(), s)
    ]


def _generators_of_square(g: Graph, _: SweepRange) -> list[Instance]:
    seen: set[Monomial] = set()
    instances: list[Instance] = []
    for pair in combinations_with_replacement(g.edges(), 2):
        u = edge_product(g, pair)
        if u not in seen:
            seen.add(u)
            instances.append({"edges": pair})
    return instances


def _per_s(_: Graph, r: SweepRange) -> list[Instance]:
    return [{"s": s} for s in r.values]


def _per_k(_: Graph, r: SweepRange) -> list[Instance]:
    return [{"k": k} for k in r.values]


def _single(_: Graph, __: SweepRange) -> list[Instance]:
    return [{}]


def _explore(_: Graph, r: SweepRange) -> list[Instance]:
    return [{"explore": r.explore}]


def _survey(_: Graph, r: SweepRange) -> list[Instance]:
    return [{"s_max": r.s_max}]


_ENTRIES = [
    Statement("seccol", "(I^(2) : e) in closed form", colon.check_seccol, _per_edge),
    Statement("col", "(I^(s+1) : u) via (I^(2) : e_1)", colon.check_col, _edge_multisets),
    Statement(
        "rfirst", "reg(I^(s+1)) by colons and I^(s+1) + I^s", regularity.check_rfirst, _per_s
    ),
    Statement("base", "reg(I^(2) : e) <= reg(I)", regularity.check_base, _per_edge),
    Statement("lemreg", "reg(I^(s+1) : u) <= reg(I)", regularity.check_lemreg, _edge_multisets),
    Statement(
        "1main",
        "reg(I^(s+1)) <= max(reg(I) + 2s, reg(I^(s+1) + I^s))",
        regularity.check_1main,
        _per_s,
    ),
    Statement("cont", "I^(s+1) in I^s without short odd cycles", containment.check_cont, _per_s),
    Statement(
        "2main", "reg(I^(s+1)) <= max(reg(I) + 2s, reg(I^s))", regularity.check_2main, _per_s
    ),
    Statement(
        "twth",
        "reg(I^(2)) <= reg(I) + 2 and reg(I^(3)) <= reg(I) + 4",
        regularity.check_twth,
        _single,
    ),
    Statement("regord", "reg(I^s) <= 2s + reg(I) - 2, s <= k", regularity.check_regord, _per_k),
    Statement(
        "resycy", "reg(I^(s)) <= 2s + reg(I) - 2, s <= k + 1", regularity.check_resycy, _per_k
    ),
    Statement(
        "fouthr", "(I^(4):u) + (I^3:u) = (I^3:u) + (X_0)", colon.check_fouthr, _generators_of_square
    ),
    Statement(
        "fococh", "reg(I^(s)) = 2s for s = 2, 3, 4 if co-chordal", regularity.check_fococh, _explore
    ),
    Statement(
        "fococh_sum", "reg(I^(4) + I^3) <= 6 if co-chordal", regularity.check_fococh_sum, _single
    ),
    Statement(
        "survey", "open conjectures for s <= s_max", background.survey_conjectures, _survey
    ),
    Statement("froberg", "reg(I) = 2 iff co-chordal", background.check_froberg, _single),
    Statement(
        "bipartite", "I^(s) = I^s if bipartite", containment.check_bipartite_equality, _per_s
    ),
    Statement("rty", "I^(s) = I^s for s <= k", containment.check_rty, _per_k),
    Statement("bn_square", "reg(I^2) <= reg(I) + 2", background.check_bn_square, _single),
    Statement("hhz", "reg(I^s) = 2s if co-chordal", background.check_hhz, _per_s),
    Statement(
        "chordal_eq",
        "reg(I^(s)) = 2s + reg(I) - 2 if chordal",
        background.check_chordal_equality,
        _per_s,
    ),
]

STATEMENTS: dict[str, Statement] = {st.id: st for st in _ENTRIES}


def get_statement(statement_id: str) -> Statement:
    try:
        return STATEMENTS[statement_id]
    except KeyError as e:
        known = ", ".join(STATEMENTS)
        raise ValueError(f"Unknown statement '{statement_id}' (known: {known})") from e
