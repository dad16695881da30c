from .betti import BettiTable, SimplicialComplex, betti_table, regularity, taylor_betti_oracle
from .graphs import Graph, enumerate_graphs, minimal_vertex_covers
from .ideals import Monomial, MonomialIdeal, edge_ideal, minimize
from .symbolic import CoverSystem, symbolic_power, symbolic_power_oracle

__all__ = [
    "BettiTable",
    "CoverSystem",
    "Graph",
    "Monomial",
    "MonomialIdeal",
    "SimplicialComplex",
    "betti_table",
    "edge_ideal",
    "enumerate_graphs",
    "minimal_vertex_covers",
    "minimize",
    "regularity",
    "symbolic_power",
    "symbolic_power_oracle",
    "taylor_betti_oracle",
]
