"""
Mixing times of exact chains.
"""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..config import DEFAULT_LIMITS, DEFAULT_TOLERANCES
from ..errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NonUniformStationaryError,
    VerificationError,
)
from .distributions import Distribution
from .partition import IsoPartition
from .transitions import TransitionMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MixingReport:
    """
    Result of a mixing-time computation.

    Args:
        epsilon: Distance threshold.
        tau: Largest first-hit time over all starts.
        per_start: First step at which each start is within `epsilon` of
            the stationary distribution.
        distances: Largest distance over all starts at steps ``0, 1, ...``.
        per_start_trace: Distance of every start at every step, shape
            ``(steps + 1, starts)``.
    """

    epsilon: float
    tau: int
    per_start: tuple[int, ...]
    distances: tuple[float, ...]
    per_start_trace: npt.NDArray[np.float64]

    @property
    def steps(self) -> int:
        return len(self.distances) - 1


def _distances(
    M: npt.NDArray[np.float64], pi: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    return 0.5 * np.abs(M - pi).sum(axis=1)


def _iterate(
    P: TransitionMatrix,
    starts: npt.NDArray[np.float64],
    pi: Distribution,
    eps: float,
    horizon: int,
    max_steps: int,
) -> MixingReport:
    if P.dim != pi.dim or starts.shape[1] != P.dim:
        raise DimensionMismatchError(
            f"matrix dimension {P.dim}, stationary distribution dimension "
            f"{pi.dim}, start dimension {starts.shape[1]}"
        )
    if not eps > 0:
        raise ValueError(f"mixing threshold must be positive, got {eps}")
    tol = DEFAULT_TOLERANCES.structural
    M = starts
    d = _distances(M, pi.weights)
    trace = [d]
    first_hit = np.where(d <= eps, 0, -1)
    t = 0
    while (first_hit < 0).any() or t < horizon:
        if t >= max_steps:
            raise NoConvergenceError(
                f"distance still {d.max():.3e} > {eps} after {t} steps"
            )
        M = M @ P.entries
        t += 1
        d_next = _distances(M, pi.weights)
        if (d_next > d + tol).any():
            x = int(np.argmax(d_next - d))
            raise VerificationError(
                f"distance from start {x} increased at step {t} "
                f"({d[x]!r} -> {d_next[x]!r}); chain is not stationary "
                f"for the given distribution"
            )
        d = d_next
        trace.append(d)
        first_hit[(first_hit < 0) & (d <= eps)] = t
        if t % 10000 == 0:
            logger.debug("step %d, max distance %.3e", t, d.max())
    per_start_trace = np.array(trace)
    per_start_trace.setflags(write=False)
    tau = int(first_hit.max(initial=0))
    logger.info("mixing time %d at epsilon %g", tau, eps)
    return MixingReport(
        epsilon=eps,
        tau=tau,
        per_start=tuple(int(h) for h in first_hit),
        distances=tuple(float(m) for m in per_start_trace.max(axis=1)),
        per_start_trace=per_start_trace,
    )


def mixing_time(
    P: TransitionMatrix,
    pi: Distribution,
    eps: float,
    horizon: int = 0,
    max_steps: int = DEFAULT_LIMITS.mixing_steps,
) -> MixingReport:
    """
    Mixing time of `P` from every point start.

    All starts are evolved together; the first-hit time of a start is the
    smallest step at which its distance to `pi` is at most `eps`. Since the
    distance of every start can only decrease, this is also the last step
    above `eps`; the iteration checks this along the way.

    Args:
        P: Transition matrix.
        pi: Stationary distribution of `P`.
        eps: Distance threshold.
        horizon: Keep iterating up to at least this step so the trace
            covers it.
        max_steps: Iteration cap.

    Raises:
        NoConvergenceError: If some start is not within `eps` after
            `max_steps` steps.
        VerificationError: If the distance of some start increases, which
            means `pi` is not stationary for `P`.
        ValueError: If `eps` is not positive.
    """
    return _iterate(
        P, np.eye(P.dim), pi, eps, horizon=horizon, max_steps=max_steps
    )


def mixing_time_lifted(
    P: TransitionMatrix,
    part: IsoPartition,
    pi: Distribution,
    eps: float,
    horizon: int = 0,
    max_steps: int = DEFAULT_LIMITS.mixing_steps,
) -> MixingReport:
    """
    Mixing time of `P` started from the uniform distribution on each class.

    With uniform `pi` and a lumpable partition this agrees step by step with
    the mixing time of the projected chain.

    Raises:
        NonUniformStationaryError: If `pi` is not uniform.
        NoConvergenceError: See :func:`mixing_time`.
        VerificationError: See :func:`mixing_time`.
    """
    if not pi.is_uniform():
        raise NonUniformStationaryError(
            "class-uniform starts need a uniform stationary distribution"
        )
    if part.num_states != P.dim:
        raise DimensionMismatchError(
            f"matrix has {P.dim} states but partition has {part.num_states}"
        )
    starts = part.indicator().T / np.array(part.class_sizes)[:, None]
    return _iterate(P, starts, pi, eps, horizon=horizon, max_steps=max_steps)
