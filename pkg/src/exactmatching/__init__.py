"""Exact red-count perfect matchings in red/blue edge-colored graphs.

The package decides whether a graph has a perfect matching with exactly k
red edges, with worst-case guarantees parameterized by the independence
number (or, for bipartite graphs, the bipartite independence number).  It
also ships the supporting machinery as a library: brute-force oracles,
matching engines, alternating-cycle surgery, densifying reductions, and
seeded instance generators.
"""

from .engines import (
    max_red_pm,
    max_weight_perfect_matching,
    min_red_pm,
    perfect_matching_on,
)
from .generators import (
    BaseFamily,
    GenerationError,
    gen_alternating_cycle_instance,
    gen_bounded_alpha,
    gen_bounded_beta,
    gen_planted_yes,
    gen_skip_extraction_instance,
    random_bipartite_colored_graph,
    random_colored_graph,
)
from .graphio import (
    ParseError,
    parse_graph,
    parse_matching,
    serialize_graph,
    serialize_matching,
)
from .graphs import (
    BLUE,
    RED,
    AlternatingCycle,
    ColoredGraph,
    CycleSet,
    Edge,
    GraphError,
    PerfectMatching,
    apply_cycles,
    edge_key,
    edge_weight,
    red_count,
    symmetric_difference,
    validate_matching,
)
from .oracle import (
    COUNTING_CAP,
    ENUMERATION_CAP,
    INDEPENDENCE_CAP,
    OracleLimitError,
    bipartite_independence_number,
    count_perfect_matchings,
    em_decide_bruteforce,
    enumerate_perfect_matchings,
    independence_number,
)
from .reductions import (
    distance_d_independence_number,
    lift_to_dense,
    lift_to_dense_bipartite,
    pullback_matching,
)
from .skips import (
    NEGATIVE_WEIGHTS,
    POSITIVE_WEIGHTS,
    SKIP_WEIGHTS,
    Biskip,
    Bundle,
    EdgePair,
    MatchingOrientation,
    Skip,
    Stretch,
    apply_biskip,
    apply_skip,
    find_biskip,
    find_bundles,
    find_saps,
    find_skip,
    guaranteed_skip_weights,
    orient,
    pair_decomposition,
)
from .solver import (
    NO_CERTIFIED,
    UNKNOWN,
    YES,
    ConfigurationError,
    SkipSearchError,
    SolverError,
    SolverParams,
    Verdict,
    approx_em,
    approx_em_bipartite,
    f_alpha,
    f_beta,
    recover_from_color_guess,
    run_phase1,
    small_diff_search,
    solve_em,
    t_alpha,
    t_beta,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingCycle",
    "BLUE",
    "BaseFamily",
    "Biskip",
    "Bundle",
    "COUNTING_CAP",
    "ColoredGraph",
    "ConfigurationError",
    "CycleSet",
    "ENUMERATION_CAP",
    "Edge",
    "EdgePair",
    "GenerationError",
    "GraphError",
    "INDEPENDENCE_CAP",
    "MatchingOrientation",
    "NEGATIVE_WEIGHTS",
    "NO_CERTIFIED",
    "OracleLimitError",
    "POSITIVE_WEIGHTS",
    "ParseError",
    "PerfectMatching",
    "RED",
    "SKIP_WEIGHTS",
    "Skip",
    "SkipSearchError",
    "SolverError",
    "SolverParams",
    "Stretch",
    "UNKNOWN",
    "Verdict",
    "YES",
    "apply_biskip",
    "apply_cycles",
    "apply_skip",
    "approx_em",
    "approx_em_bipartite",
    "bipartite_independence_number",
    "count_perfect_matchings",
    "distance_d_independence_number",
    "edge_key",
    "edge_weight",
    "em_decide_bruteforce",
    "enumerate_perfect_matchings",
    "f_alpha",
    "f_beta",
    "find_biskip",
    "find_bundles",
    "find_saps",
    "find_skip",
    "gen_alternating_cycle_instance",
    "gen_bounded_alpha",
    "gen_bounded_beta",
    "gen_planted_yes",
    "gen_skip_extraction_instance",
    "guaranteed_skip_weights",
    "independence_number",
    "lift_to_dense",
    "lift_to_dense_bipartite",
    "max_red_pm",
    "max_weight_perfect_matching",
    "min_red_pm",
    "orient",
    "pair_decomposition",
    "parse_graph",
    "parse_matching",
    "perfect_matching_on",
    "pullback_matching",
    "random_bipartite_colored_graph",
    "random_colored_graph",
    "recover_from_color_guess",
    "red_count",
    "run_phase1",
    "serialize_graph",
    "serialize_matching",
    "small_diff_search",
    "solve_em",
    "symmetric_difference",
    "t_alpha",
    "t_beta",
    "validate_matching",
]
