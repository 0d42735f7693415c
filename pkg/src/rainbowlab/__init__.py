"""Exact computational laboratory for rainbow cycles in properly edge-colored graphs.

Counts and classifies closed-walk homomorphisms, mechanically verifies the
associated inequality chain with exact arithmetic, runs two degree
regularization procedures, searches for rainbow cycles with independently
checkable certificates, and reduces loose-cycle detection in linear triple
systems to the colored-graph search.
"""

from .census import (
    ClosedWalk,
    DegeneracyProfile,
    count_anchored,
    count_cycle_copies,
    count_immediate_return,
    iter_closed_walks,
    pair_type,
    walk_census,
    walk_census_reference,
)
from .errors import (
    BipartitionError,
    DegreeZero,
    EmptyGraph,
    InvariantError,
    LemmaViolation,
    OddOrder,
    ParseError,
    PartitionFailure,
    PreconditionError,
    RainbowLabError,
    SizeLimit,
    TooManyEdges,
    WorkCapExceeded,
)
from .graph_core import (
    LEFT,
    RIGHT,
    Bipartition,
    ColoredGraph,
    DegreeStats,
    Edge,
    LinearTripleSystem,
    Violation,
    degree_profile,
    dumps_graph,
    dumps_triples,
    induced_subgraph,
    loads_graph,
    loads_triples,
    read_graph,
    read_triples,
    validate,
    validate_edge_list,
    validate_triple_list,
    write_graph,
    write_triples,
)
from .generators import (
    complete_one_factorization,
    greedy_proper_coloring,
    hypercube,
    random_bipartite,
    random_colored,
    random_linear_triple_system,
)
from .regularize import (
    ColorPreservingMap,
    DensestSubgraph,
    LopsidedResult,
    SplitResult,
    lopsided_regularize,
    lopsided_violations,
    max_avg_degree_subgraph,
    peel_to_min_degree,
    split_regularize,
    split_violations,
)
from .search import (
    CycleCertificate,
    LooseCycle,
    ReductionOutcome,
    auxiliary_graph,
    certify,
    equitable_tripartition,
    find_rainbow_cycle,
    loose_cycle_via_reduction,
    transversal_count,
    verify_loose_cycle,
)
from .verify import (
    CheckRecord,
    VerificationReport,
    verify_graph,
    verify_regularization,
)
from .walks import (
    DEFAULT_WORK_CAP,
    WalkTable,
    color_restricted_table,
    color_restricted_walk_count,
    hom_cycle_count,
    hom_star_count,
    star_walk_counts,
    walk_counts,
)

__version__ = "0.1.0"
