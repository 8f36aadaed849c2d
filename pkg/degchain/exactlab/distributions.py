from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..config import DEFAULT_TOLERANCES
from ..errors import DimensionMismatchError, VerificationError
from ..graphcore.types import BinaryMatrix
from .partition import IsoPartition
from .statespace import StateSpace
from .transitions import TransitionMatrix


@dataclass(frozen=True)
class Distribution:
    """
    Probability distribution over states or classes.
    """

    weights: npt.NDArray[np.float64]

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64, copy=True)
        if weights.ndim != 1:
            raise DimensionMismatchError(
                f"distribution must be a vector, got shape {weights.shape}"
            )
        if weights.size and weights.min() < 0:
            raise VerificationError("distribution has negative weights")
        if abs(weights.sum() - 1) > DEFAULT_TOLERANCES.structural:
            raise VerificationError(
                f"distribution sums to {weights.sum()!r}, not 1"
            )
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, size: int) -> Distribution:
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def point(cls, size: int, x: int) -> Distribution:
        weights = np.zeros(size)
        weights[x] = 1.0
        return cls(weights)

    @property
    def dim(self) -> int:
        return int(self.weights.shape[0])

    def is_uniform(self, tol: float = DEFAULT_TOLERANCES.structural) -> bool:
        return bool(np.abs(self.weights - 1.0 / self.dim).max() <= tol)


def _check_dims(expected: int, actual: int, what: str):
    if expected != actual:
        raise DimensionMismatchError(
            f"{what}: expected dimension {expected}, got {actual}"
        )


def variation_distance(mu: Distribution, nu: Distribution) -> float:
    """
    Half the L1 distance between two distributions.

    Raises:
        DimensionMismatchError: If the dimensions differ.
    """
    _check_dims(mu.dim, nu.dim, "variation distance")
    return float(0.5 * np.abs(mu.weights - nu.weights).sum())


def project_distribution(mu: Distribution, part: IsoPartition) -> Distribution:
    "Total weight of each class."
    _check_dims(part.num_states, mu.dim, "projection")
    return Distribution(
        np.bincount(
            part.class_of, weights=mu.weights, minlength=part.num_classes
        )
    )


def lift_distribution(
    mu_bar: Distribution, part: IsoPartition
) -> Distribution:
    "Spread the weight of each class uniformly over its members."
    _check_dims(part.num_classes, mu_bar.dim, "lift")
    class_of = np.array(part.class_of)
    sizes = np.array(part.class_sizes, dtype=np.float64)
    return Distribution(mu_bar.weights[class_of] / sizes[class_of])


def distribution_at(
    P: TransitionMatrix, mu: Distribution, steps: int
) -> Distribution:
    "Distribution after `steps` steps from `mu`."
    _check_dims(P.dim, mu.dim, "evolution")
    weights = mu.weights
    for _ in range(steps):
        weights = weights @ P.entries
    # renormalize away accumulated rounding
    return Distribution(weights / weights.sum())


def expected_value(
    space: StateSpace,
    statistic: Callable[[BinaryMatrix], float],
    pi: Distribution,
) -> float:
    "Expectation of a state statistic under `pi`."
    _check_dims(len(space), pi.dim, "expectation")
    values = np.array([statistic(state) for state in space], dtype=float)
    return float(values @ pi.weights)
