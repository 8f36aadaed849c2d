"""
Consistency checks between the chains, their exact matrices and their
projections.
"""

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..chains.kernels import Walker
from ..chains.runner import ChainKind, make_rng
from ..config import DEFAULT_LIMITS, DEFAULT_TOLERANCES
from ..errors import VerificationError
from ..graphcore.types import BinaryMatrix, GraphKind
from .lumping import check_lumpability, project, stationary
from .mixing import mixing_time, mixing_time_lifted
from .partition import IsoPartition, iso_partition
from .spectral import spectral
from .statespace import StateSpace
from .transitions import TransitionMatrix, chain_matrix

logger = logging.getLogger(__name__)

# spaces up to this size get every row sampled, larger ones only their
# class representatives
SAMPLE_ALL_STATES = 30


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    deviation: float
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]


def _check(name: str, deviation: float, tol: float, detail="") -> Check:
    return Check(name, bool(deviation <= tol), float(deviation), detail)


def _dominance(
    P: TransitionMatrix,
    P_bar: TransitionMatrix,
    part: IsoPartition,
    horizon: int,
) -> float:
    "How far the projected chain's worst distance exceeds the original's."
    original = mixing_time(P, stationary(P), 1.0, horizon=horizon)
    projected = mixing_time(
        P_bar, stationary(P_bar, part), 1.0, horizon=horizon
    )
    excess = np.array(projected.distances) - np.array(original.distances)
    return max(float(excess.max(initial=0.0)), 0.0)


def _lifted_identity(
    P: TransitionMatrix,
    P_bar: TransitionMatrix,
    part: IsoPartition,
    horizon: int,
) -> float:
    "Largest per-step gap between lifted and projected distance traces."
    lifted = mixing_time_lifted(
        P, part, stationary(P), 1.0, horizon=horizon
    )
    projected = mixing_time(
        P_bar, stationary(P_bar, part), 1.0, horizon=horizon
    )
    steps = min(lifted.steps, projected.steps) + 1
    gap = np.abs(
        lifted.per_start_trace[:steps] - projected.per_start_trace[:steps]
    )
    return float(gap.max(initial=0.0))


def _can_move(state: BinaryMatrix, kind: GraphKind, chain: ChainKind):
    walker = Walker(state, kind)
    if chain is ChainKind.SWITCH:
        return len(walker.ones) >= 2
    return walker.num_row_pairs > 0


def _one_step_counts(
    space: StateSpace,
    kind: GraphKind,
    chain: ChainKind,
    x: int,
    trials: int,
    rng: np.random.Generator,
) -> Counter[int]:
    counts: Counter[int] = Counter()
    state = space[x]
    for _ in range(trials):
        walker = Walker(state, kind)
        if chain is ChainKind.SWITCH:
            walker.switch(rng)
        else:
            walker.trade(rng)
        counts[space.index[walker.state().key]] += 1
    return counts


def _monte_carlo(
    space: StateSpace,
    kind: GraphKind,
    chain: ChainKind,
    P: TransitionMatrix,
    starts: Iterable[int],
    trials: int,
    seed: int,
) -> Check:
    """
    Compare one-step frequencies of the sampling kernels against rows of
    `P`, with a 3-sigma bound per entry corrected for the number of
    entries compared.
    """
    rng = make_rng(seed)
    starts = [x for x in starts if _can_move(space[x], kind, chain)]
    if not starts:
        return Check(f"{chain.value}: one-step frequencies", True, 0.0)
    compared = len(starts) * P.dim
    alpha = 2 * stats.norm.sf(3.0) / compared
    z_crit = float(stats.norm.isf(alpha / 2))
    worst_z = 0.0
    worst_freq = 0.0
    for x in starts:
        counts = _one_step_counts(space, kind, chain, x, trials, rng)
        for y in range(P.dim):
            p = P.entries[x, y]
            c = counts.get(y, 0)
            worst_freq = max(worst_freq, abs(c / trials - p))
            if p == 0 or p == 1:
                if c != p * trials:
                    worst_z = np.inf
                continue
            z = abs(c - trials * p) / np.sqrt(trials * p * (1 - p))
            worst_z = max(worst_z, float(z))
    return Check(
        f"{chain.value}: one-step frequencies",
        worst_z <= z_crit,
        worst_freq,
        f"{len(starts)} rows x {trials} trials, largest z-score "
        f"{worst_z:.2f} (bound {z_crit:.2f})",
    )


def verify_space(
    space: StateSpace,
    kind: GraphKind | None = None,
    chains: Iterable[ChainKind] = (ChainKind.SWITCH, ChainKind.CURVEBALL),
    horizon: int = 200,
    trials: int = 10**4,
    seed: int = 0,
    max_nodes: int = DEFAULT_LIMITS.canonical_nodes,
) -> VerificationReport:
    """
    Run the consistency checks on every chain over `space`.

    For each chain: lumpability of the isomorphism partition, symmetry of
    the exact matrix, detailed balance of the projected chain, the
    projected chain never being farther from stationarity than the
    original, lifted and projected distances agreeing step by step up to
    `horizon`, the projected spectrum being part of the original one, and
    the sampling kernels' one-step frequencies matching the exact rows.

    Checks that cannot be carried out (e.g. when the partition is not
    lumpable) fail with a detail message instead of raising.
    """
    kind = space.kind if kind is None else kind
    tols = DEFAULT_TOLERANCES
    part = iso_partition(space, kind, max_nodes=max_nodes)
    checks: list[Check] = []
    for chain in chains:
        chain = ChainKind(chain)
        name = chain.value
        P = chain_matrix(space, chain, kind)
        deviation = check_lumpability(P, part)
        checks.append(
            _check(f"{name}: lumpability", deviation, tols.lumpability)
        )
        checks.append(
            _check(
                f"{name}: symmetry",
                P.symmetry_deviation(),
                tols.structural,
            )
        )
        if deviation > tols.lumpability:
            checks.append(
                Check(
                    f"{name}: projection",
                    False,
                    deviation,
                    "skipped projection checks: partition not lumpable",
                )
            )
        else:
            P_bar = project(P, part)
            pi_bar = np.array(part.class_sizes) / part.num_states
            flow = pi_bar[:, None] * P_bar.entries
            checks.append(
                _check(
                    f"{name}: detailed balance",
                    float(np.abs(flow - flow.T).max(initial=0.0)),
                    tols.structural,
                )
            )
            try:
                checks.append(
                    _check(
                        f"{name}: projection dominance",
                        _dominance(P, P_bar, part, horizon),
                        tols.structural,
                    )
                )
                checks.append(
                    _check(
                        f"{name}: lifted trace identity",
                        _lifted_identity(P, P_bar, part, horizon),
                        tols.structural,
                    )
                )
                full = spectral(P, stationary(P))
                sub = spectral(P_bar, stationary(P_bar, part))
                distance = max(
                    float(np.abs(np.array(full.eigenvalues) - e).min())
                    for e in sub.eigenvalues
                )
                checks.append(
                    _check(f"{name}: projected spectrum", distance, 1e-8)
                )
            except VerificationError as e:
                checks.append(Check(f"{name}: projection", False, 0.0, str(e)))
        starts = (
            range(len(space))
            if len(space) <= SAMPLE_ALL_STATES
            else part.representatives
        )
        checks.append(
            _monte_carlo(space, kind, chain, P, starts, trials, seed)
        )
    report = VerificationReport(tuple(checks))
    for check in report.failures():
        logger.warning(
            "check %r failed (deviation %.3e) %s",
            check.name,
            check.deviation,
            check.detail,
        )
    return report
