"""
Feasibility, realization and grouping of degree sequences.
"""

import logging
from collections import defaultdict
from collections.abc import Hashable, Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import InfeasibleSequenceError, InvalidStateError
from .types import BinaryMatrix, DegreeSequence, GraphKind, NodePartition, Side

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ViolationReport:
    """
    Outcome of :func:`validate`.

    Truthy iff the sequence is realizable. Otherwise `condition` names the
    failed condition and `detail` says where it failed.
    """

    ok: bool
    condition: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.condition}: {self.detail}"


_OK = ViolationReport(True)


def _fail(condition: str, detail: str) -> ViolationReport:
    return ViolationReport(False, condition, detail)


def _common_checks(k: DegreeSequence) -> ViolationReport:
    if any(d < 0 for d in (*k.rows, *k.cols)):
        return _fail("non-negativity", "degrees must be non-negative")
    if k.kind is GraphKind.UNDIRECTED:
        if k.cols:
            return _fail("shape", "undirected sequences have no column part")
        if sum(k.rows) % 2:
            return _fail(
                "parity", f"degree sum {sum(k.rows)} of an undirected "
                "sequence must be even"
            )
        return _OK
    if k.kind is GraphKind.DIRECTED and len(k.rows) != len(k.cols):
        return _fail(
            "shape",
            f"{len(k.rows)} out-degrees but {len(k.cols)} in-degrees",
        )
    if sum(k.rows) != sum(k.cols):
        return _fail(
            "sum",
            f"row sum total {sum(k.rows)} != column sum total {sum(k.cols)}",
        )
    return _OK


def gale_ryser(rows: Sequence[int], cols: Sequence[int]) -> ViolationReport:
    n, n_prime = len(rows), len(cols)
    for i, r in enumerate(rows):
        if r > n_prime:
            return _fail(
                "bound", f"row {i} has sum {r} but there are only "
                f"{n_prime} columns"
            )
    for j, c in enumerate(cols):
        if c > n:
            return _fail(
                "bound", f"column {j} has sum {c} but there are only "
                f"{n} rows"
            )
    ordered = sorted(rows, reverse=True)
    lhs = 0
    for k in range(1, n + 1):
        lhs += ordered[k - 1]
        rhs = sum(min(c, k) for c in cols)
        if lhs > rhs:
            return _fail(
                "gale-ryser",
                f"the {k} largest row sums total {lhs} > {rhs}",
            )
    return _OK


def erdos_gallai(degrees: Sequence[int]) -> ViolationReport:
    n = len(degrees)
    for i, d in enumerate(degrees):
        if d > n - 1:
            return _fail(
                "bound", f"node {i} has degree {d} but there are only "
                f"{n - 1} other nodes"
            )
    ordered = sorted(degrees, reverse=True)
    lhs = 0
    for k in range(1, n + 1):
        lhs += ordered[k - 1]
        rhs = k * (k - 1) + sum(min(d, k) for d in ordered[k:])
        if lhs > rhs:
            return _fail(
                "erdos-gallai",
                f"the {k} largest degrees total {lhs} > {rhs}",
            )
    return _OK


def fulkerson_chen_anstee(
    out_degrees: Sequence[int], in_degrees: Sequence[int]
) -> ViolationReport:
    n = len(out_degrees)
    for i, (a, b) in enumerate(zip(out_degrees, in_degrees)):
        if a > n - 1 or b > n - 1:
            return _fail(
                "bound", f"node {i} has (out, in) = ({a}, {b}) but there "
                f"are only {n - 1} other nodes"
            )
    pairs = sorted(zip(out_degrees, in_degrees), reverse=True)
    lhs = 0
    for k in range(1, n + 1):
        lhs += pairs[k - 1][0]
        rhs = sum(min(b, k - 1) for _, b in pairs[:k]) + sum(
            min(b, k) for _, b in pairs[k:]
        )
        if lhs > rhs:
            return _fail(
                "fulkerson",
                f"the {k} largest out-degrees total {lhs} > {rhs}",
            )
    return _OK


def validate(k: DegreeSequence) -> ViolationReport:
    """
    Decide whether a degree sequence has at least one realization.

    Uses Gale-Ryser for bipartite sequences, Erdos-Gallai for undirected
    ones and Fulkerson-Chen-Anstee for directed ones.
    """
    report = _common_checks(k)
    if not report:
        return report
    match k.kind:
        case GraphKind.BIPARTITE:
            return gale_ryser(k.rows, k.cols)
        case GraphKind.UNDIRECTED:
            return erdos_gallai(k.rows)
        case GraphKind.DIRECTED:
            return fulkerson_chen_anstee(k.rows, k.cols)
    raise AssertionError(f"bug: unhandled kind {k.kind}")


def require_feasible(k: DegreeSequence) -> None:
    """
    Raise :class:`~degchain.errors.InfeasibleSequenceError` unless `k` is
    realizable.
    """
    report = validate(k)
    if not report:
        raise InfeasibleSequenceError(
            f"degree sequence {k.to_json_dict()} has no realization "
            f"({report})",
            report,
        )


def _realize_bipartite(rows, cols) -> np.ndarray:
    bits = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    residual = np.array(cols, dtype=np.int64)
    for i, r in enumerate(rows):
        # stable sort: largest residual first, lower index on ties
        order = np.argsort(-residual, kind="stable")[:r]
        bits[i, order] = 1
        residual[order] -= 1
    return bits


def _realize_undirected(degrees) -> np.ndarray:
    n = len(degrees)
    bits = np.zeros((n, n), dtype=np.uint8)
    residual = np.array(degrees, dtype=np.int64)
    while residual.max(initial=0) > 0:
        v = int(np.argmax(residual))
        others = np.argsort(-residual, kind="stable")
        others = others[others != v][: residual[v]]
        bits[v, others] = 1
        bits[others, v] = 1
        residual[others] -= 1
        residual[v] = 0
    return bits


def _realize_directed(out_degrees, in_degrees) -> np.ndarray:
    n = len(out_degrees)
    bits = np.zeros((n, n), dtype=np.uint8)
    out_residual = np.array(out_degrees, dtype=np.int64)
    in_residual = np.array(in_degrees, dtype=np.int64)
    while out_residual.max(initial=0) > 0:
        v = int(np.argmax(out_residual))
        # lexicographically largest (in, out) residual pairs first
        order = np.lexsort((np.arange(n), -out_residual, -in_residual))
        targets = order[order != v][: out_residual[v]]
        bits[v, targets] = 1
        in_residual[targets] -= 1
        out_residual[v] = 0
    return bits


def realize(k: DegreeSequence) -> BinaryMatrix:
    """
    Construct one realization of a degree sequence.

    Greedy Gale-Ryser construction for bipartite sequences, Havel-Hakimi for
    undirected ones and Kleitman-Wang for directed ones.

    Raises:
        InfeasibleSequenceError: If `k` has no realization.
    """
    require_feasible(k)
    match k.kind:
        case GraphKind.BIPARTITE:
            bits = _realize_bipartite(k.rows, k.cols)
        case GraphKind.UNDIRECTED:
            bits = _realize_undirected(k.rows)
        case GraphKind.DIRECTED:
            bits = _realize_directed(k.rows, k.cols)
    matrix = BinaryMatrix(bits)
    assert degrees_of(matrix, k.kind) == k, (
        f"bug: realization {matrix!r} does not have margins "
        f"{k.to_json_dict()}"
    )
    logger.debug("realized %s as %r", k.to_json_dict(), matrix)
    return matrix


def check_state(A: BinaryMatrix, kind: GraphKind) -> None:
    """
    Raise :class:`~degchain.errors.InvalidStateError` unless `A` respects
    the structural constraints of `kind`.
    """
    if not kind.is_square:
        return
    if A.n_rows != A.n_cols:
        raise InvalidStateError(
            f"{kind.value} states must be square, got {A.n_rows}x{A.n_cols}"
        )
    if np.any(np.diagonal(A.bits)):
        raise InvalidStateError(f"{kind.value} states must have no loops")
    if kind is GraphKind.UNDIRECTED and not np.array_equal(A.bits, A.bits.T):
        raise InvalidStateError("undirected states must be symmetric")


def degrees_of(A: BinaryMatrix, kind: GraphKind) -> DegreeSequence:
    """
    Margins of a state, as a degree sequence of the given kind.
    """
    check_state(A, kind)
    if kind is GraphKind.UNDIRECTED:
        return DegreeSequence.undirected(A.row_sums)
    return DegreeSequence(kind, A.row_sums, A.col_sums)


def _group_by(labels: Sequence[Hashable]) -> tuple[tuple[int, ...], ...]:
    groups: dict[Hashable, list[int]] = defaultdict(list)
    for index, label in enumerate(labels):
        groups[label].append(index)
    # dicts keep insertion order, i.e. groups come ordered by first member
    return tuple(tuple(g) for g in groups.values())


def degree_groups(
    k: DegreeSequence,
) -> tuple[NodePartition, NodePartition]:
    """
    Partition the nodes of each side into groups of equal degree.

    For directed sequences nodes are grouped by their (out, in) pair and the
    column partition repeats the row partition. For undirected sequences the
    column partition is empty.
    """
    match k.kind:
        case GraphKind.BIPARTITE:
            return (
                NodePartition(_group_by(k.rows), Side.ROWS),
                NodePartition(_group_by(k.cols), Side.COLS),
            )
        case GraphKind.UNDIRECTED:
            return (
                NodePartition(_group_by(k.rows), Side.ROWS),
                NodePartition((), Side.COLS),
            )
        case GraphKind.DIRECTED:
            groups = _group_by(list(zip(k.rows, k.cols)))
            return (
                NodePartition(groups, Side.ROWS),
                NodePartition(groups, Side.COLS),
            )
    raise AssertionError(f"bug: unhandled kind {k.kind}")
