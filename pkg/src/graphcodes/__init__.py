"""Binary linear codes from graphs.

A graph on n vertices with adjacency matrix A generates the binary
[2n, n] code with generator matrix [I_n | A].  This package computes the
exact minimum distance of such codes two independent ways, classifies
self-dual / Type I / Type II / extremal codes, and analyzes how the graph
join operation transforms them.
"""

from .classify import (
    CodeReport,
    CodeType,
    analyze,
    classify_type,
    extremal_bound,
    is_self_dual,
    is_self_orthogonal,
    self_dual_conditions,
    srg_self_dual,
)
from .code import (
    DEFAULT_EXACT_SEARCH_CAP,
    DEFAULT_ORACLE_CAP,
    DistanceResult,
    LinearCode,
    code_from_graph,
    encode_subset,
    is_minimally_dependent,
    iter_codewords,
    min_distance_bruteforce,
    min_distance_formula,
    parity_check,
    rank_bound,
    weight_enumerator,
)
from .errors import ArgumentError, CapacityError, ParseError, ShapeError
from .explore import (
    ConjectureReport,
    FamilyRange,
    Graph6Stream,
    RandomSpec,
    SweepItem,
    check_conjecture,
    check_rank_equality,
    check_removal_identity,
    random_graph,
    sweep,
)
from .gf2 import (
    Gf2Matrix,
    gf2_identity,
    gf2_is_identity,
    gf2_mul,
    gf2_rank,
    gf2_transpose,
    gf2_zeros,
    hstack,
)
from .graph import (
    Graph,
    SrgParams,
    VertexSet,
    are_duplicates,
    check_srg,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    family,
    join,
    m_copies_complete,
    parse_edge_list,
    parse_graph6,
    path,
    petersen,
    relabel,
    star,
    von,
    wheel,
    write_edge_list,
    write_graph6,
)
from .joins import (
    JoinAnalysis,
    TypePrediction,
    join_distance_analysis,
    join_self_dual_check,
    join_type_rule,
)

__version__ = "0.1.0"
