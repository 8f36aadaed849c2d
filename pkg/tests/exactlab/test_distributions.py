import numpy as np
import pytest

from degchain.errors import DimensionMismatchError, VerificationError
from degchain.exactlab import (
    Distribution,
    IsoPartition,
    enumerate_states,
    expected_value,
    iso_partition,
    lift_distribution,
    project_distribution,
    stationary,
    switch_matrix,
    variation_distance,
)
from degchain.graphcore import (
    DegreeSequence,
    GraphKind,
    is_connected,
    triangle_count,
)

from ..utils.parametrization import autodetect_parameters, case


@autodetect_parameters()
@case(name="identical", mu=[0.5, 0.5], nu=[0.5, 0.5], expected=0.0)
@case(name="disjoint", mu=[1, 0], nu=[0, 1], expected=1.0)
@case(name="partial", mu=[0.5, 0.5, 0], nu=[0.25, 0.25, 0.5], expected=0.5)
@case(name="point_vs_uniform", mu=[1, 0, 0, 0], nu=[0.25] * 4, expected=0.75)
def test_variation_distance(mu, nu, expected):
    d = variation_distance(Distribution(mu), Distribution(nu))
    assert d == pytest.approx(expected, abs=1e-15)


def test_variation_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        variation_distance(Distribution.uniform(2), Distribution.uniform(3))


@autodetect_parameters()
@case(name="negative", weights=[1.5, -0.5])
@case(name="not_normalized", weights=[0.5, 0.4])
def test_distribution_rejects(weights):
    with pytest.raises(VerificationError):
        Distribution(weights)


def test_distribution_must_be_vector():
    with pytest.raises(DimensionMismatchError):
        Distribution(np.eye(2) / 2)


def test_point_and_uniform():
    assert Distribution.point(3, 1).weights.tolist() == [0, 1, 0]
    assert Distribution.uniform(4).is_uniform()
    assert not Distribution.point(3, 1).is_uniform()


def test_project_and_lift():
    part = IsoPartition.from_labels(["a", "b", "a", "a"])
    mu = Distribution([0.1, 0.2, 0.3, 0.4])
    projected = project_distribution(mu, part)
    assert projected.weights.tolist() == pytest.approx([0.8, 0.2])
    lifted = lift_distribution(projected, part)
    assert lifted.weights.tolist() == pytest.approx(
        [0.8 / 3, 0.2, 0.8 / 3, 0.8 / 3]
    )
    assert project_distribution(lifted, part).weights.tolist() == (
        pytest.approx([0.8, 0.2])
    )
    with pytest.raises(DimensionMismatchError):
        lift_distribution(mu, part)


def test_expected_statistics_under_stationarity():
    # prepare
    space = enumerate_states(DegreeSequence.undirected((2, 2, 3, 2, 1)))
    pi = stationary(switch_matrix(space))
    # run
    triangles = expected_value(
        space, lambda s: triangle_count(s, GraphKind.UNDIRECTED), pi
    )
    # check
    assert triangles == pytest.approx(0.5, abs=1e-12)
    assert pi.is_uniform()


def test_disconnected_probability():
    space = enumerate_states(
        DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2))
    )
    part = iso_partition(space)
    pi = stationary(switch_matrix(space))
    disconnected = expected_value(
        space, lambda s: not is_connected(s, GraphKind.BIPARTITE), pi
    )
    assert disconnected == pytest.approx(0.2, abs=1e-12)
    assert sorted(project_distribution(pi, part).weights.tolist()) == (
        pytest.approx([0.2, 0.8], abs=1e-12)
    )
