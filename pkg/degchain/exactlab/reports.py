"""
Machine-readable reports.

JSON reports are objects with a ``"schema"`` field (currently
``"degchain/1"``), sorted keys and no timestamps, so identical inputs give
byte-identical output. CSV output is limited to distance traces,
eigenvalue lists and per-sample statistics.
"""

import csv
import io
import json
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

from .mixing import MixingReport
from .partition import IsoPartition
from .spectral import SpectralSummary
from .statespace import StateSpace
from .transitions import TransitionMatrix
from .verify import VerificationReport

SCHEMA = "degchain/1"


def report_to_json(payload: Mapping[str, Any]) -> str:
    "Serialize a report payload, adding the schema field."
    return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2)


def space_payload(space: StateSpace) -> dict[str, Any]:
    return {
        "degrees": space.k.to_json_dict(),
        "num_states": len(space),
    }


def classes_payload(
    space: StateSpace, part: IsoPartition
) -> dict[str, Any]:
    return {
        **space_payload(space),
        "num_classes": part.num_classes,
        "class_sizes": list(part.class_sizes),
        "representatives": [
            space[x].to_bitstring() for x in part.representatives
        ],
    }


def matrix_payload(
    P: TransitionMatrix, deviation: float | None = None, full: bool = False
) -> dict[str, Any]:
    """
    Summary of a transition matrix; with `full`, all entries (and exact
    fractions as ``"p/q"`` strings, if available).
    """
    payload: dict[str, Any] = {
        "dim": P.dim,
        "symmetry_deviation": P.symmetry_deviation(),
        "diagonal": [float(p) for p in P.entries.diagonal()],
    }
    if deviation is not None:
        payload["lumpability_deviation"] = deviation
    if full:
        payload["entries"] = P.entries.tolist()
        if P.exact is not None:
            payload["exact"] = [
                {str(y): str(p) for y, p in sorted(row.items())}
                for row in P.exact
            ]
    return payload


def mixing_payload(report: MixingReport) -> dict[str, Any]:
    return {
        "epsilon": report.epsilon,
        "tau": report.tau,
        "per_start": list(report.per_start),
        "distances": list(report.distances),
    }


def spectral_payload(summary: SpectralSummary) -> dict[str, Any]:
    return {
        "eigenvalues": list(summary.eigenvalues),
        "lambda_star": summary.lambda_star,
        "gap": summary.gap,
    }


def verification_payload(report: VerificationReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "checks": [
            {
                "name": check.name,
                "passed": check.passed,
                "deviation": check.deviation,
                "detail": check.detail,
            }
            for check in report.checks
        ],
    }


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def trace_to_csv(report: MixingReport) -> str:
    "One line per step: step, largest distance, distance of every start."
    starts = report.per_start_trace.shape[1]
    return _csv(
        ["t", "max_distance", *(f"start_{x}" for x in range(starts))],
        (
            [t, report.distances[t], *report.per_start_trace[t].tolist()]
            for t in range(len(report.distances))
        ),
    )


def eigenvalues_to_csv(summary: SpectralSummary) -> str:
    return _csv(
        ["index", "eigenvalue"],
        ([i + 1, e] for i, e in enumerate(summary.eigenvalues)),
    )


def samples_to_csv(rows: Iterable[Mapping[str, Any]]) -> str:
    "One line per sample, columns in key order of the first row."
    rows = list(rows)
    header = list(rows[0]) if rows else []
    return _csv(header, ([row[key] for key in header] for row in rows))
