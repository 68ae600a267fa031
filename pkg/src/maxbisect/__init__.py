"""Max bisection above the ceil(m/2) guarantee.

Every graph has a bisection cutting at least half its edges, and the bound
is tight (odd stars meet it exactly). This package decides whether a graph
can do k better: it certifies greedy bisections of size at least
ceil(m/2) + floor(|M|/2) for any matching M, kernelizes the decision
problem to at most 4k(k+1) vertices and 4k*n' + 8k^2 edges, settles the
kernel by exhaustive enumeration, and lifts witnesses back to the input.

Hot loops run in a compiled extension when available; see
maxbisect.backends.BACKEND for the active implementation.
"""

from maxbisect.backends import BACKEND
from maxbisect.bisection import (
    PairSequence,
    SeedPartition,
    greedy_bisection,
    pair_sequence,
    randomized_bisection,
)
from maxbisect.graph import (
    EMPTY_MATCHING,
    Bisection,
    Graph,
    Matching,
    cut_size,
    gen_complete,
    gen_cycle,
    gen_gnm,
    gen_gnp,
    gen_path,
    gen_star,
    make_bisection,
    new_graph,
    normalize_even,
)
from maxbisect.io import load_graph, parse_graph, save_graph, write_graph
from maxbisect.kernel import (
    EarlyYes,
    KernelOutcome,
    Reduced,
    ReductionTrace,
    SideSet,
    TraceStep,
    find_seed_vertex,
    kernelize,
    lift_witness,
    reduce_large_twin_class,
    seeded_witness,
    side_set,
    twin_classes,
)
from maxbisect.matching import maximal_matching
from maxbisect.oracle import (
    DecisionResult,
    VertexLimitExceeded,
    decide_above_guarantee,
    max_bisection_exact,
    pm_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bisection",
    "EMPTY_MATCHING",
    "DecisionResult",
    "EarlyYes",
    "Graph",
    "KernelOutcome",
    "Matching",
    "PairSequence",
    "Reduced",
    "ReductionTrace",
    "SeedPartition",
    "SideSet",
    "TraceStep",
    "VertexLimitExceeded",
    "cut_size",
    "decide_above_guarantee",
    "find_seed_vertex",
    "gen_complete",
    "gen_cycle",
    "gen_gnm",
    "gen_gnp",
    "gen_path",
    "gen_star",
    "greedy_bisection",
    "kernelize",
    "lift_witness",
    "load_graph",
    "make_bisection",
    "max_bisection_exact",
    "maximal_matching",
    "new_graph",
    "normalize_even",
    "pair_sequence",
    "parse_graph",
    "pm_lower_bound",
    "randomized_bisection",
    "reduce_large_twin_class",
    "save_graph",
    "seeded_witness",
    "side_set",
    "twin_classes",
    "write_graph",
]
