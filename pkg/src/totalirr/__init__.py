"""Total irregularity of graphs.

Core indices and structural classification, branch-move reduction,
isomorph-free enumeration of small graph families, exhaustive
verification of the extremal minima, and graph6 interchange.
"""

from .enumeration import (
    CanonicalCode,
    SizeLimitError,
    canonical_form,
    enumerate_bicyclic_by_class,
    enumerate_connected,
    enumerate_trees,
)
from .graph import (
    DegreeProfile,
    Graph,
    GraphClass,
    GraphKind,
    classify,
    degree_profile,
    degree_sequence,
    edge_irregularity,
    irr_t_of_sequence,
    make_infinity,
    make_theta,
    total_irregularity,
    two_core,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .sequences import (
    SequenceFamilyConstraint,
    enumerate_sequences,
    has_connected_realization,
    is_graphical,
    realize_connected,
)
from .transform import (
    HangingTree,
    TransformError,
    TransformStep,
    branch_transform,
    hanging_trees_at,
    predicted_delta,
    reduce_to_minimum,
)
from .verify import (
    BoundsReport,
    ConjectureReport,
    Counterexample,
    VerificationReport,
    check_conjecture,
    k_minimal,
    verify_bicyclic,
    verify_bounds,
    verify_trees,
    verify_unicyclic,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphClass",
    "GraphKind",
    "DegreeProfile",
    "CanonicalCode",
    "SizeLimitError",
    "Graph6Error",
    "HangingTree",
    "TransformError",
    "TransformStep",
    "SequenceFamilyConstraint",
    "BoundsReport",
    "ConjectureReport",
    "Counterexample",
    "VerificationReport",
    "total_irregularity",
    "edge_irregularity",
    "degree_sequence",
    "irr_t_of_sequence",
    "degree_profile",
    "two_core",
    "classify",
    "make_infinity",
    "make_theta",
    "canonical_form",
    "enumerate_trees",
    "enumerate_connected",
    "enumerate_bicyclic_by_class",
    "is_graphical",
    "has_connected_realization",
    "realize_connected",
    "enumerate_sequences",
    "hanging_trees_at",
    "branch_transform",
    "predicted_delta",
    "reduce_to_minimum",
    "k_minimal",
    "verify_trees",
    "verify_unicyclic",
    "verify_bicyclic",
    "verify_bounds",
    "check_conjecture",
    "parse_graph6",
    "write_graph6",
    "__version__",
]
