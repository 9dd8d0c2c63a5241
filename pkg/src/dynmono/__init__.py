"""Dynamic monopolies in threshold activation networks.

A dynamo (dynamic monopoly) is a seed set whose iterated threshold
activation eventually switches on every vertex of a graph.  This package
provides the activation process itself, certified strict-majority dynamo
constructions from vertex orderings, a greedy shrink meeting the
degree-sequence bound, exact brute-force solvers for desk-scale instances,
closed-form lower/upper bound reports in exact rational arithmetic, and a
randomized audit harness cross-checking all of it.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    KnWitness,
    bound_report,
    kn_witness,
    lower_bound_average,
    upper_bound_degree_sequence,
)
from .combinatorics import (
    Matching,
    VertexCover,
    chromatic_number,
    independence_number,
    matching_number,
    maximum_matching,
    minimum_vertex_cover,
    vertex_cover_number,
)
from .dynamics import ActivationTrace, is_dynamo, propagate, verify_trace
from .errors import BudgetExceededError, ConstructionError, GraphFormatError
from .graphs import (
    Graph,
    circulant_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    edge_density,
    generate,
    gn_central_count,
    gn_graph,
    gnp_graph,
    is_connected,
    parse_graph,
    path_graph,
    render_graph,
    star_graph,
)
from .minimize import (
    ShrinkState,
    exact_min_dynamo,
    greedy_shrink,
    is_minimal,
    shrink_states,
)
from .strict_majority import (
    MatchingBoundAudit,
    OrderingCertificate,
    build_ordering,
    dynamo_containing,
    half_dynamo,
    matching_bound_audit,
    neighbor_balance,
)
from .thresholds import (
    ThresholdAssignment,
    ThresholdStats,
    assign_thresholds,
    constant_thresholds,
    degree_thresholds,
    explicit_thresholds,
    gn_thresholds,
    parse_thresholds,
    render_thresholds,
    simple_majority_thresholds,
    strict_majority_thresholds,
    threshold_stats,
)

__all__ = [
    "ActivationTrace",
    "BoundEntry",
    "BoundReport",
    "BudgetExceededError",
    "ConstructionError",
    "Graph",
    "GraphFormatError",
    "KnWitness",
    "Matching",
    "MatchingBoundAudit",
    "OrderingCertificate",
    "ShrinkState",
    "ThresholdAssignment",
    "ThresholdStats",
    "VertexCover",
    "assign_thresholds",
    "bound_report",
    "build_ordering",
    "chromatic_number",
    "circulant_graph",
    "complete_graph",
    "components",
    "constant_thresholds",
    "cycle_graph",
    "degree_sequence",
    "degree_thresholds",
    "dynamo_containing",
    "edge_density",
    "exact_min_dynamo",
    "explicit_thresholds",
    "generate",
    "gn_central_count",
    "gn_graph",
    "gn_thresholds",
    "gnp_graph",
    "greedy_shrink",
    "half_dynamo",
    "independence_number",
    "is_connected",
    "is_dynamo",
    "is_minimal",
    "kn_witness",
    "lower_bound_average",
    "matching_bound_audit",
    "matching_number",
    "maximum_matching",
    "minimum_vertex_cover",
    "neighbor_balance",
    "parse_graph",
    "parse_thresholds",
    "path_graph",
    "propagate",
    "render_graph",
    "render_thresholds",
    "shrink_states",
    "simple_majority_thresholds",
    "star_graph",
    "strict_majority_thresholds",
    "threshold_stats",
    "upper_bound_degree_sequence",
    "verify_trace",
    "vertex_cover_number",
]

__version__ = "0.1.0"
