from math import comb

import networkx as nx
import numpy as np
import pytest

from degchain.chains import (
    Walker,
    apply_trade,
    curveball_step,
    make_rng,
    switch_outcomes,
    switch_step,
    trade_context,
    trade_outcomes,
)
from degchain.errors import InvalidStateError
from degchain.exactlab import (
    binomial_family,
    curveball_matrix,
    enumerate_states,
    quadratic_family,
    state_graph,
    switch_matrix,
)
from degchain.graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    degrees_of,
    realize,
)

from ..utils.parametrization import autodetect_parameters, case

DIRECTED_CYCLE = BinaryMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_switch_step_applies_only_switch():
    A = BinaryMatrix.from_rows([[1, 0], [0, 1]])
    B = switch_step(A, GraphKind.BIPARTITE, make_rng(0))
    assert B == BinaryMatrix.from_rows([[0, 1], [1, 0]])


def test_switch_step_holds_on_shared_row():
    A = BinaryMatrix.from_rows([[1, 1], [0, 0]])
    assert switch_step(A, GraphKind.BIPARTITE, make_rng(0)) == A


def test_switch_holds_on_directed_cycle():
    rng = make_rng(1)
    for _ in range(100):
        assert switch_step(DIRECTED_CYCLE, GraphKind.DIRECTED, rng) == (
            DIRECTED_CYCLE
        )
    assert set(switch_outcomes(DIRECTED_CYCLE, GraphKind.DIRECTED)) == {
        DIRECTED_CYCLE
    }


def test_switch_outcomes_undirected_rewirings():
    # prepare
    bits = np.zeros((4, 4), dtype=np.uint8)
    for a, b in ((0, 1), (2, 3)):
        bits[a, b] = bits[b, a] = 1
    A = BinaryMatrix(bits)
    # run
    outcomes = list(switch_outcomes(A, GraphKind.UNDIRECTED))
    # check
    expected = set()
    for edges in (((0, 2), (1, 3)), ((0, 3), (1, 2))):
        new = np.zeros((4, 4), dtype=np.uint8)
        for a, b in edges:
            new[a, b] = new[b, a] = 1
        expected.add(BinaryMatrix(new))
    assert len(outcomes) == 2
    assert set(outcomes) == expected


def test_switch_outcomes_count_selections():
    A = realize(DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2)))
    assert len(list(switch_outcomes(A, GraphKind.BIPARTITE))) == comb(8, 2)


@autodetect_parameters()
@case(
    name="single_one",
    rows=[[1, 0], [0, 0]],
    kind=GraphKind.BIPARTITE,
)
@case(
    name="single_edge",
    rows=[[0, 1], [1, 0]],
    kind=GraphKind.UNDIRECTED,
)
def test_switch_needs_two_ones(rows, kind):
    with pytest.raises(InvalidStateError):
        switch_step(BinaryMatrix.from_rows(rows), kind, make_rng(0))


def test_curveball_needs_two_rows():
    with pytest.raises(InvalidStateError):
        curveball_step(
            BinaryMatrix.from_rows([[1, 0]]), GraphKind.BIPARTITE, make_rng(0)
        )


def test_switch_rejects_invalid_state():
    with pytest.raises(InvalidStateError):
        switch_step(
            BinaryMatrix.from_rows([[1, 1], [0, 0]]),
            GraphKind.UNDIRECTED,
            make_rng(0),
        )


def test_trade_context():
    A = BinaryMatrix.from_rows([[1, 1, 0, 0], [0, 1, 1, 0]])
    ctx = trade_context(A, 0, 1)
    assert ctx.S_i == (0,)
    assert ctx.S_j == (2,)
    assert ctx.pool == (0, 2)
    assert ctx.num_allocations == 2


def test_trade_context_square_excludes_own_columns():
    ctx = trade_context(DIRECTED_CYCLE, 0, 1, GraphKind.DIRECTED)
    # row 0 has its one in column 1, row 1 in column 2
    assert ctx.S_i == ()
    assert ctx.S_j == (2,)


def test_trade_context_needs_distinct_rows():
    with pytest.raises(ValueError):
        trade_context(DIRECTED_CYCLE, 1, 1, GraphKind.DIRECTED)


def test_apply_trade_swaps_tradeable_ones():
    A = BinaryMatrix.from_rows([[1, 1, 0, 0], [0, 1, 1, 0]])
    ctx = trade_context(A, 0, 1)
    B = apply_trade(A, GraphKind.BIPARTITE, ctx, [2])
    assert B == BinaryMatrix.from_rows([[0, 1, 1, 0], [1, 1, 0, 0]])
    assert apply_trade(A, GraphKind.BIPARTITE, ctx, [0]) == A


def test_trade_outcomes_from_binomial_family_reach_every_state():
    # prepare
    l = 3  # noqa: E741
    space = enumerate_states(binomial_family(l))
    start = space[0]
    # run
    outcomes = [state for _, state in trade_outcomes(start, space.kind)]
    # check
    assert len(outcomes) == comb(2 * l, l)
    assert set(outcomes) == set(space)


@pytest.mark.parametrize(
    "k",
    [
        DegreeSequence.bipartite((3, 2, 2, 1), (2, 2, 2, 1, 1)),
        DegreeSequence.undirected((3, 3, 2, 2, 2, 2)),
        DegreeSequence.directed((2, 1, 2, 1), (1, 2, 1, 2)),
    ],
)
@pytest.mark.parametrize("chain", ["switch", "trade"])
def test_steps_preserve_margins(k, chain):
    walker = Walker(realize(k), k.kind, check_margins=True)
    rng = make_rng(11)
    step = walker.switch if chain == "switch" else walker.trade
    for _ in range(500):
        step(rng)
    assert degrees_of(walker.state(), k.kind) == k


def test_trade_changes_only_the_traded_rows():
    k = DegreeSequence.bipartite((3, 2, 2, 1), (2, 2, 2, 1, 1))
    rng = make_rng(5)
    state = realize(k)
    for _ in range(200):
        walker = Walker(state, GraphKind.BIPARTITE)
        walker.trade(rng)
        new = walker.state()
        changed_rows = np.flatnonzero((new.bits != state.bits).any(axis=1))
        assert len(changed_rows) in (0, 2)
        if len(changed_rows) == 2:
            i, j = changed_rows
            ctx = trade_context(state, int(i), int(j))
            changed_cols = np.flatnonzero(
                (new.bits != state.bits).any(axis=0)
            )
            assert set(changed_cols.tolist()) <= set(ctx.pool)
        state = new


@pytest.mark.parametrize(
    "k",
    [
        DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2)),
        quadratic_family(3),
        binomial_family(3),
        DegreeSequence.undirected((2, 2, 3, 2, 1)),
        DegreeSequence.undirected((2, 2, 2, 2, 2, 2)),
        DegreeSequence.directed((1, 1, 1), (1, 1, 1)),
        DegreeSequence.directed((1, 1, 1, 1), (1, 1, 1, 1)),
        DegreeSequence.directed((2, 1, 1, 0), (1, 1, 1, 1)),
    ],
)
def test_curveball_moves_are_reachable_by_switches(k):
    # prepare
    space = enumerate_states(k)
    switches = state_graph(switch_matrix(space))
    # run
    trades = curveball_matrix(space)
    # check
    for x in range(len(space)):
        reachable = nx.descendants(switches, x) | {x}
        assert set(np.flatnonzero(trades.entries[x]).tolist()) <= reachable
