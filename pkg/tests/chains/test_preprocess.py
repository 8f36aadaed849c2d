from collections import Counter

import pytest
from scipy.stats import chisquare

from degchain.chains import (
    make_rng,
    preprocess,
    preprocess_bipartite,
    preprocess_graph,
)
from degchain.errors import WrongKindError
from degchain.exactlab import enumerate_states, iso_partition
from degchain.graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    canonical_form,
    degrees_of,
)

K2222 = DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2))


def test_preprocess_bipartite_uniform_on_class():
    # prepare
    space = enumerate_states(K2222)
    part = iso_partition(space)
    small_class = min(
        range(part.num_classes), key=lambda c: part.class_sizes[c]
    )
    members = [space[x] for x in part.members(small_class)]
    assert len(members) == 18
    rng = make_rng(3)
    draws = 18 * 300
    # run
    counts = Counter(
        preprocess_bipartite(members[0], rng) for _ in range(draws)
    )
    # check
    assert set(counts) == set(members)
    _, p_value = chisquare([counts[m] for m in members])
    assert p_value > 0.001


def test_preprocess_graph_only_shuffles_equal_degrees():
    k = DegreeSequence.undirected((2, 2, 3, 2, 1))
    start = enumerate_states(k)[0]
    rng = make_rng(8)
    seen = set()
    for _ in range(300):
        B = preprocess_graph(start, GraphKind.UNDIRECTED, rng)
        assert degrees_of(B, GraphKind.UNDIRECTED) == k
        assert canonical_form(B, k.kind) == canonical_form(start, k.kind)
        seen.add(B)
    # nodes 2 and 4 are fixed, so at most 3! relabellings
    assert 1 < len(seen) <= 6


def test_preprocess_graph_identity_for_distinct_degrees():
    A = BinaryMatrix.from_rows(
        [[0, 1, 1, 1], [1, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]
    )
    # degrees (3, 2, 2, 1): nodes 1 and 2 are interchangeable but the swap
    # maps A onto itself
    rng = make_rng(0)
    for _ in range(20):
        assert preprocess_graph(A, GraphKind.UNDIRECTED, rng) == A


def test_preprocess_directed_cycle_orientations():
    cycle = BinaryMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    rng = make_rng(21)
    trials = 10**4
    counts = Counter(
        preprocess(cycle, GraphKind.DIRECTED, rng) for _ in range(trials)
    )
    assert len(counts) == 2
    share = counts[cycle] / trials
    assert abs(share - 0.5) <= 3 * (0.25 / trials) ** 0.5


def test_preprocess_graph_rejects_bipartite():
    with pytest.raises(WrongKindError):
        preprocess_graph(
            BinaryMatrix.from_rows([[1, 0], [0, 1]]),
            GraphKind.BIPARTITE,
            make_rng(0),
        )
