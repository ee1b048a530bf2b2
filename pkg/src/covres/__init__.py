"""Betti numbers, Scarf complexes and leaf orders for edge and vertex cover ideals of graphs."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CovresError,
    DomainViolation,
    EmptyCoverIdeal,
    InvalidArgument,
    InvalidFamilyParameter,
    NotAFace,
    ResourceLimit,
    UndefinedFH,
    ZeroIdeal,
)
from .graph import Graph, complement, complete_bipartite, cycle_graph, path_graph  # noqa: E402
from .complex import SimplicialComplex, clique_complex  # noqa: E402
from .homology import GF2, GF3, QQ, FieldSpec, reduced_homology  # noqa: E402
from .ideal import SquarefreeMonomialIdeal, cover_ideal, edge_ideal  # noqa: E402
from .betti import BettiTable, betti_corner_links, betti_hochster, pd_reg  # noqa: E402

__all__ = [
    "BettiTable", "CovresError", "DomainViolation", "EmptyCoverIdeal", "FieldSpec", "GF2", "GF3",
    "Graph", "InvalidArgument", "InvalidFamilyParameter", "NotAFace", "QQ", "ResourceLimit",
    "SimplicialComplex", "SquarefreeMonomialIdeal", "UndefinedFH", "ZeroIdeal",
    "betti_corner_links", "betti_hochster", "clique_complex", "complement", "complete_bipartite",
    "cover_ideal", "cycle_graph", "edge_ideal", "path_graph", "pd_reg", "reduced_homology",
]
