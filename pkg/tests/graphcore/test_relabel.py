import numpy as np
import pytest

from degchain.chains import make_rng
from degchain.errors import CanonicalFormLimitError, LengthMismatchError
from degchain.exactlab import enumerate_states
from degchain.graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    NodePartition,
    apply_relabelling,
    canonical_form,
    degree_groups,
    degrees_of,
    random_relabelling,
)

from ..utils.parametrization import autodetect_parameters, case

K2222 = DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2))
K22321 = DegreeSequence.undirected((2, 2, 3, 2, 1))


def test_apply_relabelling():
    A = BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 1]])
    B = apply_relabelling(A, [1, 0], [2, 0, 1])
    assert B == BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 0]])


def test_apply_relabelling_square_defaults_to_rows():
    A = BinaryMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    B = apply_relabelling(A, [0, 2, 1])
    assert B == BinaryMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


@autodetect_parameters()
@case(name="too_short", rho=[0], sigma=[0, 1])
@case(name="repeated_index", rho=[0, 0], sigma=[0, 1])
@case(name="out_of_range", rho=[0, 1], sigma=[0, 2])
def test_apply_relabelling_rejects(rho, sigma):
    A = BinaryMatrix.from_rows([[1, 0], [0, 1]])
    with pytest.raises(LengthMismatchError):
        apply_relabelling(A, rho, sigma)


def test_random_relabelling_stays_within_groups():
    partition = NodePartition(((0, 2, 4), (1,), (3, 5)))
    rng = make_rng(7)
    seen = set()
    for _ in range(200):
        perm = random_relabelling(partition, 6, rng)
        assert sorted(perm) == list(range(6))
        assert perm[1] == 1
        assert {perm[0], perm[2], perm[4]} == {0, 2, 4}
        assert {perm[3], perm[5]} == {3, 5}
        seen.add(tuple(perm))
    assert len(seen) == 3 * 2 * 2


@autodetect_parameters()
@case(name="bipartite_regular", k=K2222, num_states=90, num_forms=2)
@case(name="undirected_22321", k=K22321, num_states=6, num_forms=2)
@case(
    name="directed_cycle",
    k=DegreeSequence.directed((1, 1, 1), (1, 1, 1)),
    num_states=2,
    num_forms=1,
)
def test_canonical_forms_per_space(k, num_states, num_forms):
    space = enumerate_states(k)
    forms = {canonical_form(state, k.kind) for state in space}
    assert len(space) == num_states
    assert len(forms) == num_forms


def test_canonical_form_idempotent():
    for state in enumerate_states(K2222):
        form = canonical_form(state, GraphKind.BIPARTITE)
        assert canonical_form(form, GraphKind.BIPARTITE) == form
        assert degrees_of(form, GraphKind.BIPARTITE) == K2222


@pytest.mark.parametrize("k", [K2222, K22321])
def test_canonical_form_invariant_under_relabelling(k):
    rng = make_rng(2024)
    rows, cols = degree_groups(k)
    for state in enumerate_states(k):
        form = canonical_form(state, k.kind)
        for _ in range(5):
            rho = random_relabelling(rows, state.n_rows, rng)
            if k.kind.is_square:
                relabelled = apply_relabelling(state, rho)
            else:
                sigma = random_relabelling(cols, state.n_cols, rng)
                relabelled = apply_relabelling(state, rho, sigma)
            assert canonical_form(relabelled, k.kind) == form


def test_canonical_form_row_swap_within_group():
    A = BinaryMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]])
    B = BinaryMatrix.from_rows([[0, 0, 1, 1], [1, 1, 0, 0]])
    kind = GraphKind.BIPARTITE
    assert canonical_form(A, kind) == canonical_form(B, kind)


def test_canonical_form_is_smallest_relabelling():
    A = BinaryMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]])
    assert canonical_form(A, GraphKind.BIPARTITE) == BinaryMatrix.from_rows(
        [[0, 0, 1, 1], [1, 1, 0, 0]]
    )


def test_canonical_form_search_limit():
    state = next(iter(enumerate_states(K2222)))
    with pytest.raises(CanonicalFormLimitError):
        canonical_form(state, GraphKind.BIPARTITE, max_nodes=3)


def test_canonical_form_empty_matrix():
    A = BinaryMatrix(np.zeros((0, 0), dtype=np.uint8))
    assert canonical_form(A, GraphKind.UNDIRECTED) == A
