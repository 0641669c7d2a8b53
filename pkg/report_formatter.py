"""
Payload formatter for CLI output.
Builds the JSON / CSV documents written to stdout and the status lines
written to stderr.
"""

import csv
import json
import math
from typing import Iterable, TextIO, Union

import numpy as np

from entropy import EntropyReport, SurfaceGrid

ExtendedNumber = Union[float, str]


def format_status(passed: bool) -> str:
    """Return emoji indicator for pass/fail."""
    return "✅" if passed else "❌"


def format_extended(value: float) -> ExtendedNumber:
    """Finite values stay numbers; infinities become "+inf" / "-inf"."""
    if math.isinf(value):
        return "+inf" if value > 0 else "-inf"
    return float(value)


def format_complex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def format_matrix(M: np.ndarray) -> list:
    """Rows of [re, im] pairs, full double precision."""
    return [[format_complex(complex(x)) for x in row] for row in M]


def format_short(value: float) -> str:
    """Six-decimal rendering used in example summaries; infinities as tokens."""
    if math.isinf(value):
        return format_extended(value)
    if value == 0:
        return "0"
    return f"{value:.6f}"


def create_entropy_payload(report: EntropyReport) -> dict:
    return {
        "entropy": format_extended(report.entropy),
        "regime": report.regime,
        "coefficient": float(report.coefficient),
    }


def create_eval_payload(z: complex, what: str, value: np.ndarray) -> dict:
    return {
        "z": format_complex(z),
        "what": what,
        "value": format_matrix(value),
    }


def write_surface_csv(grid: SurfaceGrid, stream: TextIO) -> None:
    """Header x,y,entropy; one row per cell, y-major."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["x", "y", "entropy"])
    for j, y in enumerate(grid.y_axis):
        for i, x in enumerate(grid.x_axis):
            writer.writerow([repr(float(x)), repr(float(y)), _csv_cell(grid.values[j, i])])


def _csv_cell(value: float) -> str:
    token = format_extended(float(value))
    return token if isinstance(token, str) else repr(token)


def write_example_csv(rows: Iterable, stream: TextIO) -> None:
    """
    Example comparison table. Each row carries a label, the computed and target
    values (complex spot values as re/im, scalars with im = 0) and a pass flag.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["quantity", "computed_re", "computed_im", "target_re", "target_im", "passed"])
    for row in rows:
        computed = complex(row.computed)
        target = complex(row.target)
        writer.writerow([
            row.label,
            _csv_cell(computed.real), _csv_cell(computed.imag),
            _csv_cell(target.real), _csv_cell(target.imag),
            "PASS" if row.passed else "FAIL",
        ])


def create_example_summary(entropies: dict, coefficients: dict) -> str:
    """One-line summary, e.g. S_d=1.609438, D_d=0.960000, S_m=0, ..."""
    names = {"d": "D_d", "m": "D_m", "a": "A_a"}
    parts = []
    for kind in ("d", "m", "a"):
        parts.append(f"S_{kind}={format_short(entropies[kind])}")
        parts.append(f"{names[kind]}={format_short(coefficients[kind])}")
    return ", ".join(parts)


def create_verify_summary(seed: int, cases: int, results: Iterable) -> dict:
    suites = [
        {
            "name": result.name,
            "passed": bool(result.passed),
            "cases": int(result.cases),
            "max_residual": format_extended(float(result.max_residual)),
        }
        for result in results
    ]
    return {
        "seed": seed,
        "cases": cases,
        "passed": all(suite["passed"] for suite in suites),
        "suites": suites,
    }


def dumps(payload: dict) -> str:
    """JSON text for stdout. Infinities are already string tokens."""
    return json.dumps(payload, indent=2, allow_nan=False)
