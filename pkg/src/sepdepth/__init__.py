"""Exact treedepth through minimal separators, with treewidth-bounded pruning."""
from ._kernels import BACKEND
from .analysis import AnalysisReport, analyze, search_ratio
from .classes import (
    CliqueTree,
    chordal_minimal_separators,
    clique_tree,
    detect_classes,
    has_minor,
    is_chordal,
    is_cograph,
    is_outerplanar,
)
from .errors import BudgetError, DomainError, InputError, ResourceError, SepdepthError
from .generators import (
    basic,
    broom,
    corner_graph,
    double_broom,
    exp_sep_graph,
    random_family,
)
from .graph import Graph, VertexSet, connected_components, from_edges, induced_subgraph
from .oracle import CorpusSpec, corpus, treedepth_bruteforce, treewidth_bruteforce
from .pace import GrDocument, TreeDocument, parse_gr, parse_tree, write_gr, write_tree
from .separators import (
    SeparatorSet,
    enumerate_minimal_separators,
    full_components,
    is_minimal_separator,
    minimal_separators_bruteforce,
)
from .solver import (
    SolveConfig,
    SolveStats,
    TreedepthDecomposition,
    TreedepthResult,
    optimal_top_separators,
    top_separator,
    treedepth,
    verify_treedepth_decomposition,
)
from .treewidth import (
    TreeDecomposition,
    treewidth_exact,
    treewidth_lower,
    treewidth_upper,
    verify_tree_decomposition,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
