"""
Exhaustive enumeration of all states with a given degree sequence.
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..config import DEFAULT_LIMITS
from ..errors import StateSpaceTooLargeError
from ..graphcore.sequences import (
    erdos_gallai,
    gale_ryser,
    require_feasible,
)
from ..graphcore.types import BinaryMatrix, DegreeSequence, GraphKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateSpace:
    """
    All states with degree sequence `k`, in lexicographic order of their
    row-major bit-strings.
    """

    k: DegreeSequence
    states: tuple[BinaryMatrix, ...]
    index: dict[bytes, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "index", {s.key: i for i, s in enumerate(self.states)}
        )
        assert len(self.index) == len(self.states), "bug: duplicate states"

    @property
    def kind(self) -> GraphKind:
        return self.k.kind

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[BinaryMatrix]:
        return iter(self.states)

    def __getitem__(self, position: int) -> BinaryMatrix:
        return self.states[position]

    def index_of(self, state: BinaryMatrix) -> int:
        """
        Position of `state` in the enumeration.

        Raises:
            KeyError: If `state` is not part of this space.
        """
        try:
            return self.index[state.key]
        except KeyError as e:
            raise KeyError(f"{state!r} is not a state of {self.k}") from e


def _subsets(
    candidates: Sequence[int], ones: int
) -> Iterator[tuple[int, ...]]:
    """
    Subsets of `candidates` of size `ones`, ordered so that the 0/1 strings
    over `candidates` ascend (leaving early candidates out comes first).
    """
    if ones == 0:
        yield ()
        return
    if len(candidates) < ones:
        return
    first, rest = candidates[0], candidates[1:]
    yield from _subsets(rest, ones)
    for tail in _subsets(rest, ones - 1):
        yield (first, *tail)


class _Enumerator:
    def __init__(self, k: DegreeSequence, cap: int):
        self.k = k
        self.cap = cap
        self.bits = np.zeros(k.shape, dtype=np.uint8)
        self.states: list[BinaryMatrix] = []

    def emit(self):
        if len(self.states) >= self.cap:
            raise StateSpaceTooLargeError(
                f"degree sequence {self.k.to_json_dict()} has more than "
                f"{self.cap} states"
            )
        self.states.append(BinaryMatrix(self.bits))

    def run(self) -> list[BinaryMatrix]:
        if self.k.kind is GraphKind.UNDIRECTED:
            self._undirected(0, list(self.k.rows))
        else:
            self._rows(0, list(self.k.cols))
        return self.states

    def _rows(self, i: int, residual: list[int]):
        "Bipartite and directed states, one row at a time."
        n, n_cols = self.k.shape
        if i == n:
            if not any(residual):
                self.emit()
            return
        directed = self.k.kind is GraphKind.DIRECTED
        candidates = [
            c
            for c in range(n_cols)
            if residual[c] > 0 and not (directed and c == i)
        ]
        remaining_rows = self.k.rows[i + 1 :]
        for chosen in _subsets(candidates, self.k.rows[i]):
            for c in chosen:
                residual[c] -= 1
            # necessary for directed states too (ignores the diagonal)
            if gale_ryser(remaining_rows, residual):
                self.bits[i, list(chosen)] = 1
                self._rows(i + 1, residual)
                self.bits[i, list(chosen)] = 0
            for c in chosen:
                residual[c] += 1

    def _undirected(self, i: int, residual: list[int]):
        "Undirected states, choosing the upper-triangle part of each row."
        n = len(residual)
        if i == n:
            self.emit()
            return
        candidates = [j for j in range(i + 1, n) if residual[j] > 0]
        own = residual[i]
        residual[i] = 0
        for chosen in _subsets(candidates, own):
            for j in chosen:
                residual[j] -= 1
            rest = residual[i + 1 :]
            if sum(rest) % 2 == 0 and erdos_gallai(rest):
                self.bits[i, list(chosen)] = 1
                self.bits[list(chosen), i] = 1
                self._undirected(i + 1, residual)
                self.bits[i, list(chosen)] = 0
                self.bits[list(chosen), i] = 0
            for j in chosen:
                residual[j] += 1
        residual[i] = own


def enumerate_states(
    k: DegreeSequence, cap: int = DEFAULT_LIMITS.states
) -> StateSpace:
    """
    Enumerate every state with degree sequence `k`.

    Rows are filled one at a time in lexicographic order; branches whose
    residual margins are infeasible are pruned.

    Raises:
        InfeasibleSequenceError: If `k` has no realization.
        StateSpaceTooLargeError: If there are more than `cap` states.
    """
    require_feasible(k)
    states = _Enumerator(k, cap).run()
    logger.info("enumerated %d states of %s", len(states), k.to_json_dict())
    return StateSpace(k, tuple(states))
