from .io import (
    load_degrees,
    load_matrix,
    read_degrees,
    read_matrix,
    write_degrees,
    write_matrix,
)
from .relabel import apply_relabelling, canonical_form, random_relabelling
from .sequences import (
    ViolationReport,
    check_state,
    degree_groups,
    degrees_of,
    realize,
    require_feasible,
    validate,
)
from .stats import is_connected, to_networkx, triangle_count
from .types import BinaryMatrix, DegreeSequence, GraphKind, NodePartition, Side

__all__ = [
    "BinaryMatrix",
    "DegreeSequence",
    "GraphKind",
    "NodePartition",
    "Side",
    "ViolationReport",
    "apply_relabelling",
    "canonical_form",
    "check_state",
    "degree_groups",
    "degrees_of",
    "is_connected",
    "load_degrees",
    "load_matrix",
    "random_relabelling",
    "read_degrees",
    "read_matrix",
    "realize",
    "require_feasible",
    "to_networkx",
    "triangle_count",
    "validate",
    "write_degrees",
    "write_matrix",
]
