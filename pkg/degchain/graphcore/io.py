"""
Text formats for states and degree sequences.

Matrix text format::

    n n' kind
    0 1 1
    1 0 1

Degree-sequence JSON::

    {"kind": "bipartite", "rows": [2, 2], "cols": [1, 1, 1, 1]}
"""

import json
from pathlib import Path

import numpy as np

from ..errors import FormatError
from .sequences import check_state
from .types import BinaryMatrix, DegreeSequence, GraphKind


def parse_kind(value: str) -> GraphKind:
    try:
        return GraphKind.parse(value)
    except ValueError as e:
        raise FormatError(
            f"unknown graph kind {value!r}; expected one of "
            f"{[k.value for k in GraphKind]}"
        ) from e


def read_matrix(text: str) -> tuple[BinaryMatrix, GraphKind]:
    """
    Parse a state in the matrix text format.

    Raises:
        FormatError: If the header or the body is malformed, or the matrix
            violates the constraints of its declared kind.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 3:
        raise FormatError("first line must read 'n n' kind'")
    n_text, n_prime_text, kind_text = lines[0]
    try:
        n, n_prime = int(n_text), int(n_prime_text)
    except ValueError as e:
        raise FormatError(f"invalid dimensions in header {lines[0]!r}") from e
    kind = parse_kind(kind_text)
    body = lines[1:]
    if len(body) != n or any(len(row) != n_prime for row in body):
        raise FormatError(
            f"expected {n} rows of {n_prime} entries after the header"
        )
    if any(entry not in ("0", "1") for row in body for entry in row):
        raise FormatError("matrix entries must be 0 or 1")
    bits = np.array(
        [[int(entry) for entry in row] for row in body], dtype=np.uint8
    ).reshape(n, n_prime)
    matrix = BinaryMatrix(bits)
    try:
        check_state(matrix, kind)
    except Exception as e:
        raise FormatError(f"matrix is not a valid {kind.value} state") from e
    return matrix, kind


def write_matrix(A: BinaryMatrix, kind: GraphKind) -> str:
    lines = [f"{A.n_rows} {A.n_cols} {kind.value}"]
    lines.extend(" ".join(str(b) for b in row) for row in A.bits.tolist())
    return "\n".join(lines) + "\n"


def read_degrees(
    text: str, default_kind: GraphKind | None = None
) -> DegreeSequence:
    """
    Parse a degree sequence from its JSON representation.

    The ``"kind"`` key may be left out if `default_kind` is given.

    Raises:
        FormatError: If the JSON is malformed or misses required keys.
    """
    try:
        data = json.loads(text)
        if "kind" in data or default_kind is None:
            kind = parse_kind(data["kind"])
        else:
            kind = default_kind
        rows = [int(r) for r in data["rows"]]
        cols = [int(c) for c in data.get("cols", [])]
    except FormatError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise FormatError("invalid degree-sequence JSON") from e
    return DegreeSequence(kind, tuple(rows), tuple(cols))


def write_degrees(k: DegreeSequence) -> str:
    return json.dumps(k.to_json_dict(), sort_keys=True) + "\n"


def load_matrix(path: Path | str) -> tuple[BinaryMatrix, GraphKind]:
    return read_matrix(Path(path).read_text())


def load_degrees(
    path: Path | str, default_kind: GraphKind | None = None
) -> DegreeSequence:
    return read_degrees(Path(path).read_text(), default_kind)
