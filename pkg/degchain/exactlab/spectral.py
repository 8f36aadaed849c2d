"""
Spectra of reversible chains via cyclic Jacobi rotations.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..config import DEFAULT_LIMITS, DEFAULT_TOLERANCES
from ..errors import (
    DimensionMismatchError,
    NoConvergenceError,
    StateSpaceTooLargeError,
    VerificationError,
)
from .distributions import Distribution
from .transitions import TransitionMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralSummary:
    """
    Eigenvalues of a chain, largest first, with its second largest
    eigenvalue modulus and spectral gap.
    """

    eigenvalues: tuple[float, ...]
    lambda_star: float
    gap: float

    @classmethod
    def from_eigenvalues(cls, eigenvalues: Sequence[float]):
        ordered = sorted((float(e) for e in eigenvalues), reverse=True)
        lambda_star = max((abs(e) for e in ordered[1:]), default=0.0)
        return cls(tuple(ordered), lambda_star, 1.0 - lambda_star)


def _off_norm(A: npt.NDArray[np.float64]) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt((off**2).sum()))


def jacobi_eigenvalues(
    A: npt.NDArray[np.float64],
    tol: float = DEFAULT_TOLERANCES.structural,
    max_sweeps: int = DEFAULT_LIMITS.jacobi_sweeps,
) -> npt.NDArray[np.float64]:
    """
    Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all pairs ``p < q`` until the Frobenius norm of the
    off-diagonal part drops below `tol`.

    Raises:
        NoConvergenceError: If `max_sweeps` sweeps are not enough.
    """
    A = np.array(A, dtype=np.float64, copy=True)
    n = A.shape[0]
    # entries this small cannot keep the off-diagonal norm above tol
    negligible = tol / max(n, 1)
    sweeps = 0
    while _off_norm(A) >= tol:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                f"Jacobi rotations did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_norm(A):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                Apq = A[p, q]
                if abs(Apq) <= negligible:
                    continue
                phi = 0.5 * math.atan2(2 * Apq, A[q, q] - A[p, p])
                c, s = math.cos(phi), math.sin(phi)
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
        sweeps += 1
        logger.debug(
            "Jacobi sweep %d, off-diagonal norm %.3e", sweeps, _off_norm(A)
        )
    return np.diag(A).copy()


def spectral(
    P: TransitionMatrix,
    pi: Distribution,
    max_dim: int = DEFAULT_LIMITS.jacobi_dim,
) -> SpectralSummary:
    """
    Spectrum of a chain that is reversible with respect to `pi`.

    The eigenvalues are computed on ``D^(1/2) P D^(-1/2)`` with
    ``D = diag(pi)``, which is symmetric and similar to `P`.

    Raises:
        VerificationError: If `P` is not reversible with respect to `pi`,
            or the leading eigenvalue is not 1.
        StateSpaceTooLargeError: If `P` is larger than `max_dim`.
        NoConvergenceError: If the rotations do not converge.
    """
    tol = DEFAULT_TOLERANCES.spectral
    if P.dim != pi.dim:
        raise DimensionMismatchError(
            f"matrix dimension {P.dim} != distribution dimension {pi.dim}"
        )
    if P.dim > max_dim:
        raise StateSpaceTooLargeError(
            f"{P.dim} states exceed the eigensolver limit of {max_dim}"
        )
    flow = pi.weights[:, None] * P.entries
    deviation = float(np.abs(flow - flow.T).max(initial=0.0))
    if deviation > tol:
        raise VerificationError(
            f"chain is not reversible (deviation {deviation:.3e})"
        )
    root = np.sqrt(pi.weights)
    S = root[:, None] * P.entries / root[None, :]
    S = 0.5 * (S + S.T)
    summary = SpectralSummary.from_eigenvalues(jacobi_eigenvalues(S))
    if abs(summary.eigenvalues[0] - 1) > tol or any(
        abs(e) > 1 + tol for e in summary.eigenvalues
    ):
        raise VerificationError(
            f"eigenvalues {summary.eigenvalues[:3]} are not those of a "
            f"stochastic matrix"
        )
    logger.info("spectral gap %.6g over %d states", summary.gap, P.dim)
    return summary


def is_subspectrum(
    sub: SpectralSummary, full: SpectralSummary, tol: float = 1e-8
) -> bool:
    "Whether every eigenvalue of `sub` is within `tol` of one of `full`."
    full_values = np.array(full.eigenvalues)
    return all(
        np.abs(full_values - e).min(initial=math.inf) <= tol
        for e in sub.eigenvalues
    )
