from .chains import (
    ChainConfig,
    ChainKind,
    curveball_step,
    preprocess,
    run_chain,
    sample,
    switch_step,
)
from .config import DEFAULT_LIMITS, DEFAULT_TOLERANCES, Limits, Tolerances
from .errors import (
    CanonicalFormLimitError,
    DegchainError,
    DimensionMismatchError,
    FormatError,
    InfeasibleSequenceError,
    InvalidStateError,
    LengthMismatchError,
    NoConvergenceError,
    NonUniformStationaryError,
    NotLumpableError,
    ParameterOutOfRangeError,
    StateSpaceTooLargeError,
    VerificationError,
    WrongKindError,
)
from .exactlab import (
    Distribution,
    IsoPartition,
    MixingReport,
    SpectralSummary,
    StateSpace,
    TransitionMatrix,
    curveball_matrix,
    enumerate_states,
    iso_partition,
    mixing_time,
    mixing_time_lifted,
    project,
    spectral,
    stationary,
    switch_matrix,
    variation_distance,
)
from .graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    canonical_form,
    realize,
    validate,
)

__all__ = [
    "DEFAULT_LIMITS",
    "DEFAULT_TOLERANCES",
    "BinaryMatrix",
    "CanonicalFormLimitError",
    "ChainConfig",
    "ChainKind",
    "DegchainError",
    "DegreeSequence",
    "DimensionMismatchError",
    "Distribution",
    "FormatError",
    "GraphKind",
    "InfeasibleSequenceError",
    "InvalidStateError",
    "IsoPartition",
    "LengthMismatchError",
    "Limits",
    "MixingReport",
    "NoConvergenceError",
    "NonUniformStationaryError",
    "NotLumpableError",
    "ParameterOutOfRangeError",
    "SpectralSummary",
    "StateSpace",
    "StateSpaceTooLargeError",
    "Tolerances",
    "TransitionMatrix",
    "VerificationError",
    "WrongKindError",
    "canonical_form",
    "curveball_matrix",
    "curveball_step",
    "enumerate_states",
    "iso_partition",
    "mixing_time",
    "mixing_time_lifted",
    "preprocess",
    "project",
    "realize",
    "run_chain",
    "sample",
    "spectral",
    "stationary",
    "switch_matrix",
    "switch_step",
    "validate",
    "variation_distance",
]
