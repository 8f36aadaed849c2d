from collections import Counter

import pytest

from degchain.chains import (
    ChainConfig,
    ChainKind,
    relabel_samples,
    replica_seed,
    run_chain,
    sample,
)
from degchain.errors import InfeasibleSequenceError
from degchain.graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    canonical_form,
    degrees_of,
    realize,
)

K2222 = DegreeSequence.bipartite((2, 2, 2, 2), (2, 2, 2, 2))
DIRECTED_CYCLE = BinaryMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_run_chain_without_steps_is_identity():
    start = realize(K2222)
    assert run_chain(start, ChainConfig(), GraphKind.BIPARTITE) == start


@pytest.mark.parametrize("chain", list(ChainKind))
def test_run_chain_deterministic(chain):
    start = realize(K2222)
    cfg = ChainConfig(chain=chain, steps=50, preprocess=True, seed=99)
    first = run_chain(start, cfg, GraphKind.BIPARTITE)
    second = run_chain(start, cfg, GraphKind.BIPARTITE)
    assert first == second
    assert degrees_of(first, GraphKind.BIPARTITE) == K2222


def test_chain_config_validation():
    with pytest.raises(ValueError):
        ChainConfig(steps=-1)
    with pytest.raises(ValueError):
        ChainConfig(seed=2**64)
    assert ChainConfig(chain="curveball").chain is ChainKind.CURVEBALL


def test_replica_seed_depends_on_seed_and_index():
    seeds = {replica_seed(s, i) for s in range(3) for i in range(100)}
    assert len(seeds) == 300
    assert replica_seed(7, 3) == replica_seed(7, 3)
    assert 0 <= replica_seed(2**64 - 1, 0) < 2**64


def test_switch_with_preprocess_balances_directed_cycle_orientations():
    runs = 10**4
    counts = Counter(
        run_chain(
            DIRECTED_CYCLE,
            ChainConfig(steps=3, preprocess=True, seed=replica_seed(5, r)),
            GraphKind.DIRECTED,
        )
        for r in range(runs)
    )
    assert len(counts) == 2
    share = counts[DIRECTED_CYCLE] / runs
    assert abs(share - 0.5) <= 3 * (0.25 / runs) ** 0.5


def test_switch_without_preprocess_keeps_directed_orientation():
    cfg = ChainConfig(steps=100, seed=1)
    assert run_chain(DIRECTED_CYCLE, cfg, GraphKind.DIRECTED) == (
        DIRECTED_CYCLE
    )


def test_sample_empty():
    assert list(sample(K2222, 0, ChainConfig(steps=5))) == []


def test_sample_infeasible_raises_eagerly():
    with pytest.raises(InfeasibleSequenceError):
        sample(DegreeSequence.undirected((1, 1, 1)), 3, ChainConfig())


def test_sample_replicas_follow_derived_seeds():
    cfg = ChainConfig(chain=ChainKind.CURVEBALL, steps=10, seed=42)
    samples = list(sample(K2222, 20, cfg))
    start = realize(K2222)
    for index, state in enumerate(samples):
        replica_cfg = ChainConfig(
            chain=ChainKind.CURVEBALL, steps=10, seed=replica_seed(42, index)
        )
        assert state == run_chain(start, replica_cfg, GraphKind.BIPARTITE)
        assert degrees_of(state, GraphKind.BIPARTITE) == K2222


def test_sample_worker_pool_keeps_replica_order():
    cfg = ChainConfig(steps=20, preprocess=True, seed=3)
    sequential = list(sample(K2222, 30, cfg))
    pooled = list(sample(K2222, 30, cfg, workers=2))
    assert pooled == sequential


def test_relabel_samples_preserves_isomorphism_class():
    k = DegreeSequence.undirected((2, 2, 3, 2, 1))
    start = realize(k)
    relabelled = list(relabel_samples([start] * 50, k.kind, seed=4))
    assert len(relabelled) == 50
    form = canonical_form(start, k.kind)
    for state in relabelled:
        assert canonical_form(state, k.kind) == form
    assert len(set(relabelled)) > 1
