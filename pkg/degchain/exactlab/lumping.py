"""
Projection of a chain onto a partition of its states.
"""

import logging
from fractions import Fraction

import numpy as np

from ..config import DEFAULT_TOLERANCES
from ..errors import (
    DimensionMismatchError,
    NotLumpableError,
    VerificationError,
)
from .distributions import Distribution
from .partition import IsoPartition
from .transitions import TransitionMatrix

logger = logging.getLogger(__name__)


def _check_partition(P: TransitionMatrix, part: IsoPartition):
    if P.dim != part.num_states:
        raise DimensionMismatchError(
            f"matrix has {P.dim} states but partition has {part.num_states}"
        )


def check_lumpability(P: TransitionMatrix, part: IsoPartition) -> float:
    """
    Largest difference in the probability of jumping into a class between
    two states of the same class.

    The partition is lumpable for `P` iff the result is zero (up to
    rounding). Singleton partitions give exactly 0.
    """
    _check_partition(P, part)
    into = P.entries @ part.indicator()
    class_of = np.array(part.class_of)
    deviation = 0.0
    for c in range(part.num_classes):
        rows = into[class_of == c]
        spread = (rows.max(axis=0) - rows.min(axis=0)).max(initial=0.0)
        deviation = max(deviation, float(spread))
    return deviation


def project(
    P: TransitionMatrix,
    part: IsoPartition,
    tol: float = DEFAULT_TOLERANCES.lumpability,
) -> TransitionMatrix:
    """
    Projected chain of `P` on the classes of `part`.

    Row ``[x]`` of the result holds the probabilities of jumping from the
    class representative into each class, taken as is from `P`. Exact
    entries of `P` are carried over.

    Raises:
        NotLumpableError: If :func:`check_lumpability` exceeds `tol`.
    """
    deviation = check_lumpability(P, part)
    if deviation > tol:
        raise NotLumpableError(
            f"partition into {part.num_classes} classes is not lumpable "
            f"(deviation {deviation:.3e} > {tol:.1e})"
        )
    logger.debug("lumpability deviation %.3e", deviation)
    reps = list(part.representatives)
    entries = (P.entries @ part.indicator())[reps]
    exact = None
    if P.exact is not None:
        exact_rows = []
        for rep in reps:
            row: dict[int, Fraction] = {}
            for y, p in P.exact[rep].items():
                c = part.class_of[y]
                row[c] = row.get(c, Fraction(0)) + p
            exact_rows.append(row)
        exact = tuple(exact_rows)
    return TransitionMatrix(entries, exact)


def stationary(
    P: TransitionMatrix, part: IsoPartition | None = None
) -> Distribution:
    """
    Stationary distribution of an original or projected chain.

    Without `part`, `P` must be doubly stochastic and the result is uniform.
    With `part`, `P` is taken to be the projection on `part` of a chain with
    uniform stationary distribution; the result is proportional to the class
    sizes and is checked for detailed balance.

    Raises:
        VerificationError: If the check fails.
    """
    tol = DEFAULT_TOLERANCES.structural
    if part is None:
        deviation = float(np.abs(P.entries.sum(axis=0) - 1).max(initial=0.0))
        if deviation > tol:
            raise VerificationError(
                f"matrix is not doubly stochastic (deviation {deviation:.3e})"
            )
        return Distribution.uniform(P.dim)
    if P.dim != part.num_classes:
        raise DimensionMismatchError(
            f"matrix has {P.dim} states but partition has "
            f"{part.num_classes} classes"
        )
    sizes = np.array(part.class_sizes, dtype=np.float64)
    pi = sizes / sizes.sum()
    flow = pi[:, None] * P.entries
    deviation = float(np.abs(flow - flow.T).max(initial=0.0))
    if deviation > tol:
        raise VerificationError(
            f"projected chain violates detailed balance "
            f"(deviation {deviation:.3e})"
        )
    return Distribution(pi)
