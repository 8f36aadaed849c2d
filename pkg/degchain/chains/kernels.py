"""
Switch and Curveball step kernels.

Both kernels are written in terms of *selections*: a switch selection is an
unordered pair of ones (plus a rewiring choice for undirected graphs), a
trade selection is an unordered pair of rows plus the set of tradeable
columns that end up in the first row. Sampling draws one selection uniformly;
the exact transition matrices enumerate all of them through the same code,
so both follow the same law by construction.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ..errors import InvalidStateError
from ..graphcore.sequences import check_state
from ..graphcore.types import BinaryMatrix, GraphKind


@dataclass(frozen=True)
class TradeContext:
    """
    Tradeable columns of a row pair.

    `S_i` holds the columns where row `row_i` has a one and row `row_j` a
    zero, `S_j` the other way round. For directed graphs the columns
    `row_i` and `row_j` are never tradeable; for undirected graphs they are
    excluded as well and rows stand for nodes.
    """

    row_i: int
    row_j: int
    S_i: tuple[int, ...]
    S_j: tuple[int, ...]

    @property
    def s_i(self) -> int:
        return len(self.S_i)

    @property
    def s_j(self) -> int:
        return len(self.S_j)

    @property
    def pool(self) -> tuple[int, ...]:
        "All tradeable columns, ascending."
        return tuple(sorted(self.S_i + self.S_j))

    @property
    def num_allocations(self) -> int:
        return comb(self.s_i + self.s_j, self.s_i)


def _trade_context(bits: np.ndarray, kind: GraphKind, i: int, j: int):
    row_i, row_j = bits[i], bits[j]
    S_i = np.flatnonzero((row_i == 1) & (row_j == 0))
    S_j = np.flatnonzero((row_i == 0) & (row_j == 1))
    if kind.is_square:
        S_i = S_i[(S_i != i) & (S_i != j)]
        S_j = S_j[(S_j != i) & (S_j != j)]
    return TradeContext(i, j, tuple(S_i.tolist()), tuple(S_j.tolist()))


def trade_context(
    A: BinaryMatrix, i: int, j: int, kind: GraphKind = GraphKind.BIPARTITE
) -> TradeContext:
    """
    Compute the tradeable columns of rows `i` and `j` of a state.
    """
    if i == j:
        raise ValueError(f"a trade needs two distinct rows, got {i} twice")
    return _trade_context(A.bits, kind, i, j)


class Walker:
    """
    Private mutable working copy of a state that kernel steps act on.

    Keeps the list of ones (or of undirected edges ``(a, b)`` with
    ``a < b``) up to date so that switch selections can be drawn in
    constant time.

    Args:
        start: Initial state.
        kind: Graph kind of the state.
        check_margins: Re-check all margins after every step.
    """

    def __init__(
        self,
        start: BinaryMatrix,
        kind: GraphKind,
        check_margins: bool = False,
    ):
        check_state(start, kind)
        self.kind = kind
        self.bits = np.array(start.bits, dtype=np.uint8, copy=True)
        rows, cols = np.nonzero(self.bits)
        if kind is GraphKind.UNDIRECTED:
            upper = rows < cols
            rows, cols = rows[upper], cols[upper]
        self.ones: list[tuple[int, int]] = list(
            zip(rows.tolist(), cols.tolist())
        )
        self.check_margins = check_margins
        self._margins = (start.row_sums, start.col_sums)

    def state(self) -> BinaryMatrix:
        return BinaryMatrix(self.bits)

    # selection counts

    @property
    def num_switch_selections(self) -> int:
        pairs = comb(len(self.ones), 2)
        return 2 * pairs if self.kind is GraphKind.UNDIRECTED else pairs

    @property
    def num_row_pairs(self) -> int:
        return comb(self.bits.shape[0], 2)

    # switch

    def switch_selection(self, a: int, b: int, rewiring: int = 0) -> bool:
        """
        Apply the switch selected by the ones (edges) at list positions `a`
        and `b` if it is possible. Returns whether the state changed.
        """
        if self.kind is GraphKind.UNDIRECTED:
            return self._switch_edges(a, b, rewiring)
        (i, j), (k, l) = self.ones[a], self.ones[b]
        bits = self.bits
        if i == k or j == l or bits[i, l] or bits[k, j]:
            return False
        if self.kind is GraphKind.DIRECTED and (i == l or k == j):
            return False
        bits[i, j] = bits[k, l] = 0
        bits[i, l] = bits[k, j] = 1
        self.ones[a], self.ones[b] = (i, l), (k, j)
        self._after_step()
        return True

    def _switch_edges(self, a: int, b: int, rewiring: int) -> bool:
        (u, v), (x, y) = self.ones[a], self.ones[b]
        if len({u, v, x, y}) < 4:
            return False
        new_1, new_2 = ((u, x), (v, y)) if rewiring == 0 else ((u, y), (v, x))
        bits = self.bits
        if bits[new_1] or bits[new_2]:
            return False
        for p, q in ((u, v), (x, y)):
            bits[p, q] = bits[q, p] = 0
        for p, q in (new_1, new_2):
            bits[p, q] = bits[q, p] = 1
        self.ones[a] = (min(new_1), max(new_1))
        self.ones[b] = (min(new_2), max(new_2))
        self._after_step()
        return True

    def switch(self, rng: np.random.Generator) -> bool:
        """
        One step of the switch chain: draw a selection uniformly and apply
        it if possible, otherwise hold.
        """
        m = len(self.ones)
        if m < 2:
            raise InvalidStateError(
                f"the switch chain needs at least two ones, state has {m}"
            )
        a = int(rng.integers(m))
        b = int(rng.integers(m - 1))
        if b >= a:
            b += 1
        rewiring = 0
        if self.kind is GraphKind.UNDIRECTED:
            rewiring = int(rng.integers(2))
        return self.switch_selection(a, b, rewiring)

    # trade

    def trade_selection(self, ctx: TradeContext, chosen: Iterable[int]):
        """
        Give row `ctx.row_i` ones exactly on `chosen` among the tradeable
        columns and row `ctx.row_j` the rest.
        """
        i, j = ctx.row_i, ctx.row_j
        pool = ctx.pool
        chosen_set = set(chosen)
        assert len(chosen_set) == ctx.s_i and chosen_set <= set(pool), (
            f"bug: invalid allocation {sorted(chosen_set)} for {ctx}"
        )
        if chosen_set == set(ctx.S_i):
            return False
        bits = self.bits
        for c in pool:
            bits[i, c] = 1 if c in chosen_set else 0
            bits[j, c] = 1 - bits[i, c]
            if self.kind is GraphKind.UNDIRECTED:
                bits[c, i], bits[c, j] = bits[i, c], bits[j, c]
        self._rebuild_ones()
        self._after_step()
        return True

    def trade(self, rng: np.random.Generator) -> bool:
        """
        One step of the Curveball chain: draw a row pair uniformly, then an
        allocation of the tradeable columns uniformly, and apply it.
        """
        n = self.bits.shape[0]
        if n < 2:
            raise InvalidStateError(
                f"the Curveball chain needs at least two rows, state has {n}"
            )
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1))
        if j >= i:
            j += 1
        i, j = min(i, j), max(i, j)
        ctx = _trade_context(self.bits, self.kind, i, j)
        # partial Fisher-Yates over the pool
        pool = list(ctx.pool)
        for t in range(ctx.s_i):
            r = int(rng.integers(t, len(pool)))
            pool[t], pool[r] = pool[r], pool[t]
        return self.trade_selection(ctx, pool[: ctx.s_i])

    # bookkeeping

    def _rebuild_ones(self):
        rows, cols = np.nonzero(self.bits)
        if self.kind is GraphKind.UNDIRECTED:
            upper = rows < cols
            rows, cols = rows[upper], cols[upper]
        self.ones = list(zip(rows.tolist(), cols.tolist()))

    def _after_step(self):
        if not self.check_margins:
            return
        margins = (
            tuple(int(s) for s in self.bits.sum(axis=1)),
            tuple(int(s) for s in self.bits.sum(axis=0)),
        )
        assert margins == self._margins, "bug: kernel step changed margins"
        if self.kind.is_square:
            assert not np.any(np.diagonal(self.bits)), "bug: loop created"
        if self.kind is GraphKind.UNDIRECTED:
            assert np.array_equal(
                self.bits, self.bits.T
            ), "bug: undirected state lost symmetry"


def switch_step(
    A: BinaryMatrix, kind: GraphKind, rng: np.random.Generator
) -> BinaryMatrix:
    """
    One switch-chain step from `A`.

    Bipartite and directed states: an unordered pair of distinct ones is
    drawn uniformly; if the 2x2 submatrix on their rows and columns can be
    switched (and, for directed graphs, no loop results) the switch is
    applied, otherwise the state is returned unchanged. Undirected states:
    an unordered pair of distinct edges and one of the two rewirings are
    drawn uniformly and applied iff all four endpoints are distinct and no
    edge would be duplicated.

    Raises:
        InvalidStateError: If `A` is not a valid state or has fewer than two
            ones (edges).
    """
    walker = Walker(A, kind)
    walker.switch(rng)
    return walker.state()


def curveball_step(
    A: BinaryMatrix, kind: GraphKind, rng: np.random.Generator
) -> BinaryMatrix:
    """
    One Curveball-chain step from `A`: a uniformly drawn row pair trades its
    tradeable ones, each of the ``binom(s_i + s_j, s_i)`` allocations
    (including the unchanged one) being equally likely.

    Raises:
        InvalidStateError: If `A` is not a valid state or has fewer than two
            rows.
    """
    walker = Walker(A, kind)
    walker.trade(rng)
    return walker.state()


def apply_trade(
    A: BinaryMatrix,
    kind: GraphKind,
    ctx: TradeContext,
    chosen: Iterable[int],
) -> BinaryMatrix:
    """
    Apply the trade allocation that gives row `ctx.row_i` ones exactly on
    the columns `chosen`.
    """
    walker = Walker(A, kind)
    walker.trade_selection(ctx, chosen)
    return walker.state()


def switch_outcomes(
    A: BinaryMatrix, kind: GraphKind
) -> Iterator[BinaryMatrix]:
    """
    Result of every switch selection from `A`, one per selection (held
    selections yield `A` itself).
    """
    template = Walker(A, kind)
    rewirings = (0, 1) if kind is GraphKind.UNDIRECTED else (0,)
    for a, b in combinations(range(len(template.ones)), 2):
        for rewiring in rewirings:
            walker = Walker(A, kind)
            walker.switch_selection(a, b, rewiring)
            yield walker.state()


def trade_outcomes(
    A: BinaryMatrix, kind: GraphKind
) -> Iterator[tuple[TradeContext, BinaryMatrix]]:
    """
    Result of every trade selection from `A`, together with the context of
    its row pair. Each row pair contributes one result per allocation.
    """
    for i, j in combinations(range(A.n_rows), 2):
        ctx = _trade_context(A.bits, kind, i, j)
        for chosen in combinations(ctx.pool, ctx.s_i):
            walker = Walker(A, kind)
            walker.trade_selection(ctx, chosen)
            yield ctx, walker.state()
