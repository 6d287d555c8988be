"""Conflict-free connection colorings of trees: construction, verification, exact search."""

from .decompose import DecompositionTrace, algorithm1, depth, min_depth, ranking_from_trace
from .errors import BudgetExceeded, CfcError
from .exact import (
    CriticalityReport,
    SearchReport,
    cfc_exact,
    cfc_fast_path,
    cfc_lower_bound,
    general_bounds,
    is_cfc_critical,
    oc_exact,
    rank_exact,
)
from .families import FamilySpec, generate, generate_with_certificate, random_tree
from .graph import Graph, Tree, balanced_edges, build_graph, build_tree, cut_edge_forest, path_edges, split
from .verify import (
    EdgeColoring,
    ParityVector,
    Verdict,
    is_cfc_coloring,
    is_edge_ranking,
    is_odd_connected,
    parity_spectrum,
    parity_vector,
    restrict_coloring,
)

__all__ = [
    "BudgetExceeded",
    "CfcError",
    "CriticalityReport",
    "DecompositionTrace",
    "EdgeColoring",
    "FamilySpec",
    "Graph",
    "ParityVector",
    "SearchReport",
    "Tree",
    "Verdict",
    "algorithm1",
    "balanced_edges",
    "build_graph",
    "build_tree",
    "cfc_exact",
    "cfc_fast_path",
    "cfc_lower_bound",
    "cut_edge_forest",
    "depth",
    "general_bounds",
    "generate",
    "generate_with_certificate",
    "is_cfc_coloring",
    "is_cfc_critical",
    "is_edge_ranking",
    "is_odd_connected",
    "min_depth",
    "oc_exact",
    "parity_spectrum",
    "parity_vector",
    "path_edges",
    "random_tree",
    "rank_exact",
    "ranking_from_trace",
    "restrict_coloring",
    "split",
]

__version__ = "0.1.0"
