"""Exact Hitting Set on set systems of low VC-dimension."""

from .core import (
    HittingSet,
    InternalError,
    InvalidInputError,
    NoSolutionError,
    ParseError,
    ResourceLimitError,
    SetSystem,
    dual,
    is_shattered,
    projection,
    realizes_pattern,
    verify_hitting_set,
)
from .matching import NoCoverError, SimpleGraph, max_matching, min_edge_cover
from .reductions import (
    PsiInstance,
    ReductionLayout,
    embedding_to_solution,
    extract_embedding,
    find_bk_system,
    normalize_psi,
    psi_to_hitting_set,
    split_edges_triangle_free,
    verify_reduction_vc,
    vertex_cover_system,
)
from .solvers import (
    SolveResult,
    Status,
    brute_force_min_hitting_set,
    greedy_hitting_set,
    preprocess_35,
    solve_35,
    solve_auto,
    solve_dual_vc1,
    solve_vc1,
)
from .vc import (
    alpha_beta_profile,
    dual_vc_dimension,
    is_ab_system,
    sauer_shelah_check,
    vc_dimension,
)

__version__ = "0.1.0"
