import numpy as np
import pytest

from degchain.chains import ChainKind
from degchain.errors import (
    DimensionMismatchError,
    NotLumpableError,
    VerificationError,
)
from degchain.exactlab import (
    Distribution,
    IsoPartition,
    TransitionMatrix,
    chain_matrix,
    check_lumpability,
    enumerate_states,
    iso_partition,
    lift_distribution,
    project,
    project_distribution,
    property_partition,
    stationary,
    switch_matrix,
)
from degchain.graphcore import DegreeSequence, GraphKind, is_connected

from ..utils.sequences import RANDOM_SEQUENCES

K2222 = DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2))


@pytest.fixture(scope="module")
def k2222():
    space = enumerate_states(K2222)
    return space, iso_partition(space), switch_matrix(space)


@pytest.mark.parametrize("k", RANDOM_SEQUENCES)
@pytest.mark.parametrize("chain", list(ChainKind))
def test_iso_partition_is_lumpable(k, chain):
    space = enumerate_states(k)
    P = chain_matrix(space, chain)
    assert check_lumpability(P, iso_partition(space)) <= 1e-12


@pytest.mark.parametrize("chain", list(ChainKind))
def test_singleton_partition_is_exactly_lumpable(chain):
    space = enumerate_states(DegreeSequence.undirected((2, 2, 3, 2, 1)))
    P = chain_matrix(space, chain)
    part = IsoPartition.singletons(len(space))
    assert check_lumpability(P, part) == 0.0
    assert np.abs(project(P, part).entries - P.entries).max() <= 1e-12


def test_projected_stationary_distribution(k2222):
    space, part, P = k2222
    P_bar = project(P, part)
    pi_bar = stationary(P_bar, part)
    assert sorted(part.class_sizes) == [18, 72]
    expected = np.array(part.class_sizes) / 90
    assert np.abs(pi_bar.weights - expected).max() <= 1e-12
    assert sorted(pi_bar.weights.tolist()) == pytest.approx(
        [0.2, 0.8], abs=1e-12
    )


def test_connectivity_partition_matches_isomorphism_classes(k2222):
    space, part, P = k2222
    by_connectivity = property_partition(
        space, lambda state: is_connected(state, GraphKind.BIPARTITE)
    )
    assert sorted(by_connectivity.class_sizes) == sorted(part.class_sizes)
    assert check_lumpability(P, by_connectivity) <= 1e-12


def test_project_rejects_non_lumpable_partition(k2222):
    space, _, P = k2222
    first = space[0]
    part = property_partition(space, lambda state: state == first)
    assert check_lumpability(P, part) > 1e-9
    with pytest.raises(NotLumpableError):
        project(P, part)


def test_projection_commutes_with_steps(k2222):
    # prepare
    _, part, P = k2222
    P_bar = project(P, part)
    rng = np.random.default_rng(17)
    for _ in range(5):
        mu = Distribution(rng.dirichlet(np.ones(P.dim)))
        # run
        left = project_distribution(Distribution(mu.weights @ P.entries), part)
        right = project_distribution(mu, part).weights @ P_bar.entries
        # check
        assert np.abs(left.weights - right).max() <= 1e-12


def test_lift_commutes_with_steps(k2222):
    _, part, P = k2222
    P_bar = project(P, part)
    rng = np.random.default_rng(18)
    for _ in range(5):
        mu_bar = Distribution(rng.dirichlet(np.ones(part.num_classes)))
        left = lift_distribution(mu_bar, part).weights @ P.entries
        right = lift_distribution(
            Distribution(mu_bar.weights @ P_bar.entries), part
        )
        assert np.abs(left - right.weights).max() <= 1e-12


def test_project_keeps_exact_entries(k2222):
    space, part, _ = k2222
    P_bar = project(switch_matrix(space, exact=True), part)
    for c in range(part.num_classes):
        assert sum(P_bar.exact[c].values()) == 1
        for d, p in P_bar.exact[c].items():
            assert float(p) == pytest.approx(P_bar.entries[c, d], abs=1e-12)


def test_stationary_uniform_for_doubly_stochastic(k2222):
    _, _, P = k2222
    assert stationary(P).is_uniform()


def test_stationary_rejects():
    P = TransitionMatrix(np.array([[0.5, 0.5], [1.0, 0.0]]))
    with pytest.raises(VerificationError):
        stationary(P)
    with pytest.raises(VerificationError):
        stationary(P, IsoPartition.singletons(2))
    with pytest.raises(DimensionMismatchError):
        stationary(P, IsoPartition.singletons(3))


def test_partition_dimension_mismatch(k2222):
    _, _, P = k2222
    with pytest.raises(DimensionMismatchError):
        check_lumpability(P, IsoPartition.singletons(3))


def test_projected_rows_are_representative_rows(k2222):
    _, part, P = k2222
    lumped = P.entries @ part.indicator()
    P_bar = project(P, part)
    for c, rep in enumerate(part.representatives):
        assert np.array_equal(P_bar.entries[c], lumped[rep])
