import logging
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..config import DEFAULT_LIMITS
from ..graphcore.relabel import canonical_form
from ..graphcore.types import BinaryMatrix, GraphKind
from .statespace import StateSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsoPartition:
    """
    Partition of a state space into classes.

    Classes are numbered in order of their lowest state index, which is also
    the class representative.
    """

    class_of: tuple[int, ...]
    class_sizes: tuple[int, ...]
    representatives: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "IsoPartition":
        numbering: dict[Hashable, int] = {}
        class_of = []
        representatives = []
        for x, label in enumerate(labels):
            if label not in numbering:
                numbering[label] = len(numbering)
                representatives.append(x)
            class_of.append(numbering[label])
        sizes = np.bincount(class_of, minlength=len(numbering))
        return cls(
            tuple(class_of),
            tuple(int(s) for s in sizes),
            tuple(representatives),
        )

    @classmethod
    def singletons(cls, size: int) -> "IsoPartition":
        return cls.from_labels(range(size))

    @property
    def num_states(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def members(self, c: int) -> list[int]:
        return [x for x, k in enumerate(self.class_of) if k == c]

    def indicator(self) -> npt.NDArray[np.float64]:
        "0/1 matrix of shape (states, classes) with one 1 per row."
        result = np.zeros((self.num_states, self.num_classes))
        result[np.arange(self.num_states), self.class_of] = 1.0
        return result


def iso_partition(
    space: StateSpace,
    kind: GraphKind | None = None,
    max_nodes: int = DEFAULT_LIMITS.canonical_nodes,
) -> IsoPartition:
    """
    Partition a state space into isomorphism classes by canonical form.

    Raises:
        CanonicalFormLimitError: If a canonical form search hits
            `max_nodes`.
    """
    kind = space.kind if kind is None else kind
    partition = IsoPartition.from_labels(
        [canonical_form(state, kind, max_nodes).key for state in space]
    )
    logger.info(
        "%d states fall into %d isomorphism classes",
        partition.num_states,
        partition.num_classes,
    )
    return partition


def property_partition(
    space: StateSpace, statistic: Callable[[BinaryMatrix], Hashable]
) -> IsoPartition:
    """
    Partition a state space by the value of a state statistic.

    The result is only lumpable for some statistics; check with
    :func:`~degchain.exactlab.lumping.check_lumpability` before projecting.
    """
    return IsoPartition.from_labels([statistic(state) for state in space])
