"""Interlacement matrices of circuit partitions in 4-regular multigraphs.

Build a 4-regular multigraph from explicit half-edge pairings, pick an
Euler system, choose any transition system, and the package hands back
the traced circuit partition, its modified interlacement matrix over
GF(2), and exact rank/kernel data.  Every structural identity the
matrix construction rests on ships with an executable check.
"""

from .errors import (
    AlreadyEuler,
    DimensionMismatch,
    GraphError,
    GraphMismatch,
    IndexOutOfRange,
    InterlacementError,
    NoVertices,
    NotAJunction,
    NotEulerSystem,
    ParseError,
    Singular,
    SlotMissing,
    SlotReused,
    TooLarge,
    UnknownVertex,
)
from .gf2 import (
    GF2Matrix,
    GF2Vector,
    add_row,
    inverse,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    rref,
    spans_equal,
)
from .graph4 import (
    Circuit,
    CircuitPartition,
    Graph4R,
    HalfEdge,
    TRANSITIONS,
    Transition,
    TransitionSystem,
    build_graph,
    circuit_count,
    connected_components,
    core_space,
    core_vector,
    random_matching_graph,
    trace_partition,
    unite_circuits,
)
from .euler import (
    DoubleOccurrenceWord,
    EulerSystem,
    TransitionLabel,
    all_euler_systems_bruteforce,
    dow,
    euler_from_partition,
    hierholzer,
    kappa_transform,
    kotzig_orbit,
    label_transitions,
    transition_for_label,
)
from .interlace import (
    CheckResult,
    ModifiedInterlacementMatrix,
    SimpleGraph,
    adjacency_matrix,
    check_core_independence,
    check_core_kernel,
    check_interlacement_complement,
    check_inverse,
    check_label_exchange,
    check_local_complement_transform,
    check_naturality,
    circuit_nullity,
    interlacement_graph,
    modified_interlacement_matrix,
    modified_local_complement,
    simple_local_complement,
)
from .profile import (
    PartitionProfile,
    euler_count,
    profile_by_nullity,
    profile_by_tracing,
)
from .verify import (
    PropertyOutcome,
    VerifyReport,
    run_exhaustive,
    run_random_graphs,
    run_samples,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyEuler",
    "Circuit",
    "CircuitPartition",
    "CheckResult",
    "DimensionMismatch",
    "DoubleOccurrenceWord",
    "EulerSystem",
    "GF2Matrix",
    "GF2Vector",
    "Graph4R",
    "GraphError",
    "GraphMismatch",
    "HalfEdge",
    "IndexOutOfRange",
    "InterlacementError",
    "ModifiedInterlacementMatrix",
    "NoVertices",
    "NotAJunction",
    "NotEulerSystem",
    "ParseError",
    "PartitionProfile",
    "PropertyOutcome",
    "SimpleGraph",
    "Singular",
    "SlotMissing",
    "SlotReused",
    "TooLarge",
    "TRANSITIONS",
    "Transition",
    "TransitionLabel",
    "TransitionSystem",
    "UnknownVertex",
    "VerifyReport",
    "add_row",
    "adjacency_matrix",
    "all_euler_systems_bruteforce",
    "build_graph",
    "check_core_independence",
    "check_core_kernel",
    "check_interlacement_complement",
    "check_inverse",
    "check_label_exchange",
    "check_local_complement_transform",
    "check_naturality",
    "circuit_count",
    "circuit_nullity",
    "connected_components",
    "core_space",
    "core_vector",
    "dow",
    "euler_count",
    "euler_from_partition",
    "hierholzer",
    "interlacement_graph",
    "inverse",
    "kappa_transform",
    "kernel_basis",
    "kotzig_orbit",
    "label_transitions",
    "mat_mul",
    "mat_vec",
    "modified_interlacement_matrix",
    "modified_local_complement",
    "profile_by_nullity",
    "profile_by_tracing",
    "random_matching_graph",
    "rank",
    "rref",
    "run_exhaustive",
    "run_random_graphs",
    "run_samples",
    "simple_local_complement",
    "spans_equal",
    "trace_partition",
    "transition_for_label",
    "unite_circuits",
]
