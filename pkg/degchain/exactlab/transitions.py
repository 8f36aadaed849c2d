"""
Exact transition matrices of the switch and Curveball chains.
"""

import logging
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np
import numpy.typing as npt

from ..chains.kernels import switch_outcomes, trade_outcomes
from ..chains.runner import ChainKind
from ..config import DEFAULT_TOLERANCES
from ..errors import VerificationError
from ..graphcore.types import GraphKind
from .statespace import StateSpace

logger = logging.getLogger(__name__)

ExactRow = Mapping[int, Fraction]


@dataclass(frozen=True)
class TransitionMatrix:
    """
    Dense row-stochastic matrix over states or isomorphism classes.

    Args:
        entries: Transition probabilities.
        exact: Optional exact probabilities, one sparse row (column index to
            fraction) per state.
    """

    entries: npt.NDArray[np.float64]
    exact: tuple[ExactRow, ...] | None = None

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.float64, copy=True)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise VerificationError(
                f"transition matrix must be square, got {entries.shape}"
            )
        if entries.size and (entries.min() < 0 or entries.max() > 1):
            raise VerificationError("transition probabilities outside [0, 1]")
        deviation = np.abs(entries.sum(axis=1) - 1).max(initial=0.0)
        if deviation > DEFAULT_TOLERANCES.structural:
            raise VerificationError(
                f"rows do not sum to 1 (max deviation {deviation:.3e})"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def exact_entry(self, x: int, y: int) -> Fraction:
        if self.exact is None:
            raise ValueError("matrix was built without exact entries")
        return self.exact[x].get(y, Fraction(0))

    def symmetry_deviation(self) -> float:
        return float(np.abs(self.entries - self.entries.T).max(initial=0.0))


def _from_exact_rows(
    rows: Sequence[dict[int, Fraction]], keep_exact: bool
) -> TransitionMatrix:
    dim = len(rows)
    entries = np.zeros((dim, dim))
    for x, row in enumerate(rows):
        for y, p in row.items():
            entries[x, y] = float(p)
    return TransitionMatrix(entries, tuple(rows) if keep_exact else None)


def switch_matrix(
    space: StateSpace, kind: GraphKind | None = None, exact: bool = False
) -> TransitionMatrix:
    """
    Transition matrix of the switch chain on `space`.

    ``P[G][H]`` is the number of switch selections taking `G` to `H` divided
    by the number of selections (``binom(m, 2)`` pairs of ones, times two
    rewirings for undirected graphs); held selections count towards the
    diagonal. A state with fewer than two ones only holds.

    Args:
        space: Enumerated state space.
        kind: Graph kind; defaults to that of the space.
        exact: Also keep exact fractions.
    """
    kind = space.kind if kind is None else kind
    rows: list[dict[int, Fraction]] = []
    for x, state in enumerate(space):
        counts = Counter(
            space.index[outcome.key]
            for outcome in switch_outcomes(state, kind)
        )
        total = sum(counts.values())
        if total == 0:
            rows.append({x: Fraction(1)})
            continue
        rows.append({y: Fraction(c, total) for y, c in counts.items()})
    logger.info("built %dx%d switch matrix", len(rows), len(rows))
    return _from_exact_rows(rows, exact)


def curveball_matrix(
    space: StateSpace, kind: GraphKind | None = None, exact: bool = False
) -> TransitionMatrix:
    """
    Transition matrix of the Curveball chain on `space`.

    Every row pair has probability ``binom(n, 2)^-1`` and every allocation
    of its tradeable columns ``binom(s_i + s_j, s_i)^-1`` (the unchanged
    allocation included). A state with fewer than two rows only holds.

    Args:
        space: Enumerated state space.
        kind: Graph kind; defaults to that of the space.
        exact: Also keep exact fractions.
    """
    kind = space.kind if kind is None else kind
    rows: list[dict[int, Fraction]] = []
    for x, state in enumerate(space):
        pairs = comb(state.n_rows, 2)
        if pairs == 0:
            rows.append({x: Fraction(1)})
            continue
        row: dict[int, Fraction] = {}
        for ctx, outcome in trade_outcomes(state, kind):
            y = space.index[outcome.key]
            row[y] = row.get(y, Fraction(0)) + Fraction(
                1, pairs * ctx.num_allocations
            )
        rows.append(row)
    logger.info("built %dx%d Curveball matrix", len(rows), len(rows))
    return _from_exact_rows(rows, exact)


def chain_matrix(
    space: StateSpace,
    chain: ChainKind,
    kind: GraphKind | None = None,
    exact: bool = False,
) -> TransitionMatrix:
    "Transition matrix of the named chain."
    if ChainKind(chain) is ChainKind.SWITCH:
        return switch_matrix(space, kind, exact=exact)
    return curveball_matrix(space, kind, exact=exact)
