from .distributions import (
    Distribution,
    distribution_at,
    expected_value,
    lift_distribution,
    project_distribution,
    variation_distance,
)
from .families import FAMILIES, binomial_family, quadratic_family
from .lumping import check_lumpability, project, stationary
from .mixing import MixingReport, mixing_time, mixing_time_lifted
from .partition import IsoPartition, iso_partition, property_partition
from .reachability import state_graph, state_graph_distance
from .reports import report_to_json
from .spectral import (
    SpectralSummary,
    is_subspectrum,
    jacobi_eigenvalues,
    spectral,
)
from .statespace import StateSpace, enumerate_states
from .transitions import (
    TransitionMatrix,
    chain_matrix,
    curveball_matrix,
    switch_matrix,
)
from .verify import Check, VerificationReport, verify_space

__all__ = [
    "FAMILIES",
    "Check",
    "Distribution",
    "IsoPartition",
    "MixingReport",
    "SpectralSummary",
    "StateSpace",
    "TransitionMatrix",
    "VerificationReport",
    "binomial_family",
    "chain_matrix",
    "check_lumpability",
    "curveball_matrix",
    "distribution_at",
    "enumerate_states",
    "expected_value",
    "is_subspectrum",
    "iso_partition",
    "jacobi_eigenvalues",
    "lift_distribution",
    "mixing_time",
    "mixing_time_lifted",
    "project",
    "project_distribution",
    "property_partition",
    "quadratic_family",
    "report_to_json",
    "spectral",
    "state_graph",
    "state_graph_distance",
    "stationary",
    "switch_matrix",
    "variation_distance",
    "verify_space",
]
