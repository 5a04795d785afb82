"""walkgauge: walk entropy and exact walk-regularity analysis.

A graph is walk-regular when diag(A^k) is constant for every k, i.e. all
vertices see the same number of closed walks of every length. This package
decides that property exactly in integer arithmetic, evaluates the walk
entropy S(beta) of the distribution p_i = (e^{beta A})_ii / tr e^{beta A}
with certified inequality residuals, and classifies any simple undirected
graph into the trichotomy WalkRegular / RegularNotWalkRegular / NonRegular.

All values are immutable and all operations are pure, so graphs, spectra
and profiles are safe to share across threads.
"""

from .entropy import (
    CheckResult,
    EntropyPoint,
    EntropyProfile,
    MaxEntropyEquivalenceReport,
    WalkClass,
    WalkClassLabel,
    bg_bound_check,
    bg_constant,
    classify,
    default_grid,
    diagonal_variance,
    entropy_profile,
    entropy_via_z,
    limit_infinity_entropy,
    profile_to_csv,
    run_invariant_battery,
    sigma_d_profile,
    max_entropy_equivalence_check,
    walk_entropy,
)
from .errors import TheoremViolationError
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    expected_class,
    generate,
    search_regular_not_walk_regular,
)
from .graphs import (
    Graph,
    GraphFormatError,
    adjacency_matrix,
    connected_components,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    is_connected,
    is_regular,
    parse_edge_list,
    parse_graph6,
)
from .spectral import (
    ExpDiagonal,
    LogScaledValue,
    SpectralConvergenceError,
    Spectrum,
    eigendecompose,
    exp_diagonal,
    partition_function,
    subgraph_centrality,
)
from .walks import (
    DiagonalSequence,
    WalkCountError,
    WalkRegularityDecision,
    characteristic_polynomial,
    diagonal_sequence,
    distinct_eigenvalue_bound,
    hamilton_reduction_check,
    is_walk_regular_exact,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DiagonalSequence",
    "EntropyPoint",
    "EntropyProfile",
    "ExpDiagonal",
    "FAMILY_NAMES",
    "FamilySpec",
    "Graph",
    "GraphFormatError",
    "LogScaledValue",
    "SpectralConvergenceError",
    "Spectrum",
    "MaxEntropyEquivalenceReport",
    "TheoremViolationError",
    "WalkClass",
    "WalkClassLabel",
    "WalkCountError",
    "WalkRegularityDecision",
    "adjacency_matrix",
    "bg_bound_check",
    "bg_constant",
    "characteristic_polynomial",
    "classify",
    "connected_components",
    "default_grid",
    "diagonal_sequence",
    "diagonal_variance",
    "disjoint_union",
    "distinct_eigenvalue_bound",
    "eigendecompose",
    "emit_edge_list",
    "emit_graph6",
    "entropy_profile",
    "entropy_via_z",
    "expected_class",
    "exp_diagonal",
    "generate",
    "hamilton_reduction_check",
    "is_connected",
    "is_regular",
    "is_walk_regular_exact",
    "limit_infinity_entropy",
    "parse_edge_list",
    "parse_graph6",
    "partition_function",
    "profile_to_csv",
    "run_invariant_battery",
    "search_regular_not_walk_regular",
    "sigma_d_profile",
    "subgraph_centrality",
    "max_entropy_equivalence_check",
    "walk_entropy",
]
