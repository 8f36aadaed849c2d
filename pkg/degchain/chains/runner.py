"""
Seeded chain runs and replica sampling.

All randomness comes from :class:`numpy.random.Generator` over the
:class:`~numpy.random.PCG64` bit generator. Replica ``r`` of a sample with
master seed ``s`` runs with the seed derived by
``SeedSequence(s, spawn_key=(r,))``, so each replica's trajectory depends
only on ``(s, r)`` and not on how replicas are scheduled.
"""

import logging
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from functools import partial

import numpy as np

from ..graphcore.sequences import realize, require_feasible
from ..graphcore.types import BinaryMatrix, DegreeSequence, GraphKind
from .kernels import Walker
from .preprocess import preprocess

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


class ChainKind(Enum):
    SWITCH = "switch"
    CURVEBALL = "curveball"


@dataclass(frozen=True)
class ChainConfig:
    """
    Parameters of a chain run.

    Args:
        chain: Which kernel to apply.
        steps: Number of kernel steps after the optional preprocessing.
        preprocess: Whether to relabel uniformly within equal-degree groups
            before the first step.
        seed: Unsigned 64-bit seed; fully determines the trajectory.
        check_margins: Re-check margins after every step (slow).
    """

    chain: ChainKind = ChainKind.SWITCH
    steps: int = 0
    preprocess: bool = False
    seed: int = 0
    check_margins: bool = False

    def __post_init__(self):
        object.__setattr__(self, "chain", ChainKind(self.chain))
        if self.steps < 0:
            raise ValueError(f"steps must be non-negative, got {self.steps}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(
                f"seed must be an unsigned 64-bit integer, got {self.seed}"
            )


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def replica_seed(seed: int, index: int) -> int:
    """
    Seed of replica `index` of a sample with master seed `seed`.
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def run_chain(
    start: BinaryMatrix, cfg: ChainConfig, kind: GraphKind
) -> BinaryMatrix:
    """
    Run one chain: preprocess once if configured, then apply `cfg.steps`
    kernel steps.
    """
    rng = make_rng(cfg.seed)
    state = preprocess(start, kind, rng) if cfg.preprocess else start
    walker = Walker(state, kind, check_margins=cfg.check_margins)
    step = (
        walker.switch if cfg.chain is ChainKind.SWITCH else walker.trade
    )
    for _ in range(cfg.steps):
        step(rng)
    return walker.state()


def _replica_configs(cfg: ChainConfig, count: int) -> Iterator[ChainConfig]:
    for index in range(count):
        yield replace(cfg, seed=replica_seed(cfg.seed, index))


def _run_replicas(
    start: BinaryMatrix,
    cfg: ChainConfig,
    kind: GraphKind,
    count: int,
    workers: int | None,
) -> Iterator[BinaryMatrix]:
    configs = _replica_configs(cfg, count)
    if workers is None or workers <= 1:
        for index, replica_cfg in enumerate(configs):
            if index and index % 10000 == 0:
                logger.info("sampled %d of %d replicas", index, count)
            yield run_chain(start, replica_cfg, kind)
        return
    run = partial(_run_replica, start, kind)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, i.e. by replica index
        yield from pool.map(run, configs, chunksize=256)


def _run_replica(
    start: BinaryMatrix, kind: GraphKind, cfg: ChainConfig
) -> BinaryMatrix:
    return run_chain(start, cfg, kind)


def sample(
    k: DegreeSequence,
    count: int,
    cfg: ChainConfig,
    workers: int | None = None,
) -> Iterator[BinaryMatrix]:
    """
    Draw `count` independent samples with degrees `k`.

    One realization of `k` is constructed; every replica starts from it,
    applies the preprocessing step if configured and runs `cfg.steps` steps
    with its own derived seed. Samples come out in replica order.

    Args:
        k: Degree sequence to sample from.
        count: Number of replicas.
        cfg: Chain parameters; `cfg.seed` is the master seed.
        workers: Run replicas in a process pool of this size. The output
            does not depend on it.

    Raises:
        InfeasibleSequenceError: If `k` has no realization (raised
            immediately, not on iteration).
    """
    require_feasible(k)
    if count < 0:
        raise ValueError(f"sample count must be non-negative, got {count}")
    start = realize(k)
    logger.info(
        "sampling %d replicas of %s from %r", count, cfg, start
    )
    return _run_replicas(start, cfg, k.kind, count, workers)


def relabel_samples(
    samples: Iterable[BinaryMatrix], kind: GraphKind, seed: int
) -> Iterator[BinaryMatrix]:
    """
    Relabel every sample uniformly within equal-degree groups.

    Turns a sample of isomorphism-class representatives (e.g. from a
    projected chain) into a sample of labelled graphs.
    """
    for index, state in enumerate(samples):
        rng = make_rng(replica_seed(seed, index))
        yield preprocess(state, kind, rng)
