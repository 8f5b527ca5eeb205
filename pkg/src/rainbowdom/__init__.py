"""Exact computation toolkit for k-rainbow domination on regular graphs."""

from .errors import (
    BadOrder,
    ColorOutOfRange,
    DuplicateEdge,
    IdentityInConnectionSet,
    IndexOutOfRange,
    InvalidInput,
    KOutOfRange,
    LoopEdge,
    NotConnected,
    NotCubic,
    NotInverseClosed,
    ParameterTooSmall,
    RainbowDomError,
    SizeMismatch,
    TranscriptionMismatch,
    UnsupportedK,
)
from .families import (
    Classification,
    FormulaResult,
    classify_cubic_abelian_cayley,
    construct_kdd_function,
    construct_mobius_function,
    construct_prism_function,
    formula_cycle,
    formula_mobius,
    formula_prism,
    rdr_cayley_catalog,
)
from .graphs import (
    AbelianGroupSpec,
    Family,
    Graph,
    bipartition,
    build_graph,
    cartesian_product_complete,
    cayley_abelian,
    complete_bipartite,
    cycle,
    franklin,
    girth,
    graphs_isomorphic,
    hypercube,
    is_connected,
    mobius_ladder,
    prism,
    regular_degree,
    wreath,
)
from .rainbow import (
    ColorAssignment,
    ColoringStats,
    RdrConditions,
    VerificationReport,
    c_c0_bounds,
    check_counting_identities,
    check_weight_bounds,
    coloring_stats,
    discharge,
    lift_color,
    lower_bound_general,
    lower_bound_regular,
    rdr_necessary_conditions,
    upper_bound_monotone,
    verify_krdf,
    weight,
)
from .solver import (
    BACKEND,
    DominationResult,
    SearchBudget,
    SolveResult,
    exact_gamma_rk,
    exact_gamma_rk_ladder,
    gamma_rk_via_product,
    is_rdr,
    min_dominating_set,
    rdr_witness,
)

__version__ = "0.1.0"
