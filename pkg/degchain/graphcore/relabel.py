"""
Degree-preserving relabellings and canonical forms under them.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_LIMITS
from ..errors import CanonicalFormLimitError, LengthMismatchError
from .sequences import check_state, degree_groups, degrees_of
from .types import BinaryMatrix, GraphKind, NodePartition


def apply_relabelling(
    A: BinaryMatrix,
    rho: Sequence[int],
    sigma: Sequence[int] | None = None,
) -> BinaryMatrix:
    """
    Relabel rows by `rho` and columns by `sigma`: ``B[i, j] = A[rho[i],
    sigma[j]]``.

    `sigma` defaults to `rho`, which is the only valid choice for
    (un)directed graphs.

    Raises:
        LengthMismatchError: If a permutation does not match the matrix
            shape or is not a permutation.
    """
    if sigma is None:
        sigma = rho
    for name, perm, length in (
        ("row", rho, A.n_rows),
        ("column", sigma, A.n_cols),
    ):
        if len(perm) != length or sorted(perm) != list(range(length)):
            raise LengthMismatchError(
                f"{name} relabelling {list(perm)!r} is not a permutation of "
                f"{length} indices"
            )
    return BinaryMatrix(A.bits[np.ix_(list(rho), list(sigma))])


def random_relabelling(
    partition: NodePartition, size: int, rng: np.random.Generator
) -> list[int]:
    """
    Draw a permutation that shuffles uniformly within each group.

    Args:
        partition: Groups of interchangeable indices.
        size: Total number of indices (length of the permutation).
        rng: Source of randomness; each group consumes one
            :meth:`~numpy.random.Generator.permutation` call.
    """
    perm = list(range(size))
    for group in partition.groups:
        if len(group) < 2:
            continue
        shuffled = rng.permutation(len(group))
        for position, source in zip(group, shuffled):
            perm[position] = group[source]
    return perm


@dataclass
class _Cell:
    "Positions that still have to be filled by some order of `members`."

    positions: tuple[int, ...]
    members: tuple[int, ...]


class _CanonicalSearch:
    """
    Backtracking search for the lexicographically smallest row-major
    bit-string among all relabellings that keep nodes in their degree group.

    Row positions are filled one at a time. Choosing the node for row
    position p fixes row p of the result up to the order of columns inside
    each column cell; putting the non-neighbours of the chosen node first in
    every cell makes row p minimal, so cells are split accordingly and the
    remaining freedom stays inside the cells. Branches whose rows exceed the
    best rows found so far are pruned.
    """

    def __init__(self, A: BinaryMatrix, kind: GraphKind, max_nodes: int):
        self.bits = A.bits
        self.kind = kind
        self.max_nodes = max_nodes
        self.visited = 0
        self.best: list[tuple[int, ...]] | None = None
        row_groups, col_groups = degree_groups(degrees_of(A, kind))
        self.row_cells = [_Cell(g, g) for g in row_groups.groups]
        if kind.is_square:
            # rows and columns share one relabelling
            self.col_cells = None
        else:
            self.col_cells = [_Cell(g, g) for g in col_groups.groups]

    def run(self) -> BinaryMatrix:
        if self.bits.shape[0] == 0:
            return BinaryMatrix(self.bits)
        self._search(0, self.row_cells, self.col_cells, [])
        assert self.best is not None, "bug: search produced no candidate"
        return BinaryMatrix(np.array(self.best, dtype=np.uint8).reshape(
            self.bits.shape
        ))

    def _visit(self):
        self.visited += 1
        if self.visited > self.max_nodes:
            raise CanonicalFormLimitError(
                f"canonical form search exceeded {self.max_nodes} visited "
                "partial relabellings"
            )

    def _split(
        self, cells: list[_Cell], node: int
    ) -> tuple[list[_Cell], tuple[int, ...]]:
        "Split cells by adjacency from `node`, returning the new row too."
        n_cols = self.bits.shape[1]
        row = [0] * n_cols
        split: list[_Cell] = []
        for cell in cells:
            zeros = tuple(m for m in cell.members if not self.bits[node, m])
            ones = tuple(m for m in cell.members if self.bits[node, m])
            cut = len(zeros)
            if zeros:
                split.append(_Cell(cell.positions[:cut], zeros))
            if ones:
                split.append(_Cell(cell.positions[cut:], ones))
                for position in cell.positions[cut:]:
                    row[position] = 1
        return split, tuple(row)

    def _search(
        self,
        p: int,
        row_cells: list[_Cell],
        col_cells: list[_Cell] | None,
        rows: list[tuple[int, ...]],
    ) -> None:
        self._visit()
        if p == self.bits.shape[0]:
            if self.best is None or rows < self.best:
                self.best = rows
            return
        index, cell = next(
            (i, c) for i, c in enumerate(row_cells) if p in c.positions
        )
        assert cell.positions[0] == p, "bug: earlier position left unfilled"
        for node in cell.members:
            rest = _Cell(
                cell.positions[1:],
                tuple(m for m in cell.members if m != node),
            )
            placed = [_Cell((p,), (node,))] + ([rest] if rest.members else [])
            new_row_cells = row_cells[:index] + placed + row_cells[index + 1 :]
            if col_cells is None:
                new_row_cells, row = self._split(new_row_cells, node)
                new_col_cells = None
            else:
                new_col_cells, row = self._split(col_cells, node)
            candidate = rows + [row]
            if self.best is not None and candidate > self.best[: p + 1]:
                continue
            self._search(p + 1, new_row_cells, new_col_cells, candidate)


def canonical_form(
    A: BinaryMatrix,
    kind: GraphKind,
    max_nodes: int = DEFAULT_LIMITS.canonical_nodes,
) -> BinaryMatrix:
    """
    Canonical representative of the isomorphism class of a state.

    Two states of the same kind and margins get the same canonical form iff
    they are isomorphic by a degree-preserving relabelling (one per side for
    bipartite graphs, a single one for (un)directed graphs). The result is
    the lexicographically smallest row-major bit-string among all such
    relabellings.

    Raises:
        CanonicalFormLimitError: If more than `max_nodes` partial
            relabellings are visited.
    """
    check_state(A, kind)
    return _CanonicalSearch(A, kind, max_nodes).run()
