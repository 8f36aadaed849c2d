from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graphcore.sequences import ViolationReport


class DegchainError(Exception):
    """
    Base class of all errors raised deliberately by this package.
    """


class FormatError(DegchainError):
    """
    Raised when a matrix text file or degree-sequence JSON is malformed.
    """


class InfeasibleSequenceError(DegchainError):
    """
    Raised when a degree sequence has no realization.

    The violation report naming the failed condition is available as
    :attr:`report`.
    """

    def __init__(self, message: str, report: ViolationReport | None = None):
        super().__init__(message)
        self.report = report


class InvalidStateError(DegchainError):
    """
    Raised when a matrix is not a valid state of its graph kind (entries
    outside {0, 1}, non-zero diagonal, asymmetry, too few ones to move).
    """


class LengthMismatchError(DegchainError):
    """
    Raised when a permutation does not fit the matrix it is applied to.
    """


class WrongKindError(DegchainError):
    """
    Raised when an operation is asked to work on an unsupported graph kind.
    """


class CanonicalFormLimitError(DegchainError):
    """
    Raised when the canonical-form search visits more partial relabellings
    than its configured bound allows.
    """


class StateSpaceTooLargeError(DegchainError):
    """
    Raised when an enumeration would produce more states than its cap.
    """


class NotLumpableError(DegchainError):
    """
    Raised when a transition matrix cannot be projected onto a partition
    because transition probabilities into some class differ within a class.
    """


class VerificationError(DegchainError):
    """
    Raised when a numerical property a result depends on (double
    stochasticity, detailed balance, reversibility, monotone distances)
    does not hold within tolerance.
    """


class NonUniformStationaryError(DegchainError):
    """
    Raised when a computation that requires a uniform stationary
    distribution is given a non-uniform one.
    """


class NoConvergenceError(DegchainError):
    """
    Raised when an iteration does not converge within its cap.
    """


class DimensionMismatchError(DegchainError):
    """
    Raised when distributions, matrices or partitions do not have matching
    dimensions.
    """


class ParameterOutOfRangeError(DegchainError):
    """
    Raised when a family parameter is outside its admissible range.
    """
