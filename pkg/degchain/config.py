from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """
    Work bounds shared by the exact-analysis operations.

    Args:
        canonical_nodes: Maximum number of partial relabellings the
            canonical-form search may visit before giving up.
        states: Maximum number of states an enumeration may produce.
        mixing_steps: Maximum number of steps a mixing-time iteration may
            take before giving up.
        jacobi_dim: Largest matrix dimension the Jacobi eigensolver accepts.
        jacobi_sweeps: Maximum number of full Jacobi sweeps.
    """

    canonical_nodes: int = 10**7
    states: int = 10**6
    mixing_steps: int = 10**6
    jacobi_dim: int = 2000
    jacobi_sweeps: int = 100


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerances for the exact-analysis checks.
    """

    structural: float = 1e-12
    spectral: float = 1e-10
    lumpability: float = 1e-9


DEFAULT_LIMITS = Limits()
DEFAULT_TOLERANCES = Tolerances()
