from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
import numpy.typing as npt

from ..errors import InvalidStateError


class GraphKind(Enum):
    BIPARTITE = "bipartite"
    UNDIRECTED = "undirected"
    DIRECTED = "directed"

    @property
    def is_square(self) -> bool:
        """
        Whether states are adjacency (rather than bi-adjacency) matrices.
        """
        return self is not GraphKind.BIPARTITE

    @classmethod
    def parse(cls, value: GraphKind | str) -> GraphKind:
        if isinstance(value, GraphKind):
            return value
        aliases = {
            "undirected-simple": cls.UNDIRECTED,
            "directed-simple": cls.DIRECTED,
        }
        if value in aliases:
            return aliases[value]
        return cls(value)


@dataclass(frozen=True)
class DegreeSequence:
    """
    Margins that every state of a state space shares.

    For bipartite graphs `rows` and `cols` are the row and column sums of
    the bi-adjacency matrix. For undirected graphs `rows` holds the degrees
    and `cols` is empty. For directed graphs `rows` holds the out-degrees
    and `cols` the in-degrees.
    """

    kind: GraphKind
    rows: tuple[int, ...]
    cols: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", GraphKind.parse(self.kind))
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        object.__setattr__(self, "cols", tuple(int(c) for c in self.cols))

    @classmethod
    def bipartite(
        cls, rows: Iterable[int], cols: Iterable[int]
    ) -> DegreeSequence:
        return cls(GraphKind.BIPARTITE, tuple(rows), tuple(cols))

    @classmethod
    def undirected(cls, degrees: Iterable[int]) -> DegreeSequence:
        return cls(GraphKind.UNDIRECTED, tuple(degrees), ())

    @classmethod
    def directed(
        cls, out_degrees: Iterable[int], in_degrees: Iterable[int]
    ) -> DegreeSequence:
        return cls(GraphKind.DIRECTED, tuple(out_degrees), tuple(in_degrees))

    @property
    def shape(self) -> tuple[int, int]:
        """
        Shape of the matrices realizing this sequence.
        """
        if self.kind is GraphKind.BIPARTITE:
            return len(self.rows), len(self.cols)
        return len(self.rows), len(self.rows)

    @property
    def column_sums(self) -> tuple[int, ...]:
        "Expected column sums of a realizing matrix."
        if self.kind is GraphKind.UNDIRECTED:
            return self.rows
        return self.cols

    @property
    def num_ones(self) -> int:
        "Number of ones in every realizing matrix."
        return sum(self.rows)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "rows": list(self.rows),
            "cols": list(self.cols),
        }


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """
    Immutable dense 0/1 matrix, the (bi-)adjacency matrix of a state.

    Equality and hashing go through :attr:`key`, the canonical byte
    encoding ``(n_rows, n_cols, packed row-major bits)``.
    """

    bits: npt.NDArray[np.uint8]
    _key: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.uint8, copy=True, ndmin=2)
        if bits.ndim != 2:
            raise InvalidStateError(
                f"expected a 2-dimensional matrix, got shape {bits.shape}"
            )
        if bits.size and bits.max() > 1:
            raise InvalidStateError("matrix entries must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)
        n_rows, n_cols = bits.shape
        object.__setattr__(
            self,
            "_key",
            n_rows.to_bytes(4, "big")
            + n_cols.to_bytes(4, "big")
            + np.packbits(bits, axis=None).tobytes(),
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BinaryMatrix:
        return cls(np.array(rows, dtype=np.uint8))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BinaryMatrix:
        return cls(np.zeros((n_rows, n_cols), dtype=np.uint8))

    @property
    def n_rows(self) -> int:
        return int(self.bits.shape[0])

    @property
    def n_cols(self) -> int:
        return int(self.bits.shape[1])

    @property
    def key(self) -> bytes:
        return self._key

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.bits.sum(axis=1))

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.bits.sum(axis=0))

    def to_bitstring(self) -> str:
        return "".join(str(b) for b in self.bits.ravel())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other: BinaryMatrix) -> bool:
        return (self.bits.shape, self.to_bitstring()) < (
            other.bits.shape,
            other.to_bitstring(),
        )

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        rows = ", ".join(
            "".join(str(b) for b in row) for row in self.bits.tolist()
        )
        return f"BinaryMatrix({rows})"


class Side(Enum):
    ROWS = "rows"
    COLS = "cols"


@dataclass(frozen=True)
class NodePartition:
    """
    Partition of the nodes of one side into groups of equal degree.

    Groups are ordered by their smallest member and each group is sorted.
    """

    groups: tuple[tuple[int, ...], ...]
    side: Side = Side.ROWS

    @property
    def size(self) -> int:
        return sum(len(g) for g in self.groups)

    def group_of(self) -> dict[int, int]:
        "Map from node index to the index of its group."
        return {
            node: index
            for index, group in enumerate(self.groups)
            for node in group
        }
