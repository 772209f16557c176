"""Lossless JSON encoding of exact results.

Rationals become canonical "p/q" strings (plain "n" for integers), complex
exact scalars become {"re": ..., "im": ...}, floats are rounded to 12
significant digits. Keys are sorted and no timing enters the payload, so equal
inputs give byte-identical output.
"""
from __future__ import annotations

import dataclasses
import json
import os
from fractions import Fraction
from pathlib import Path

import numpy as np

from .exact import ExactMatrix, ExactPoly, ExactScalar

SCHEMA = "bwkit-report/1"
REPORT_DIR_ENV = "BWKIT_REPORT_DIR"


def rational(x: Fraction) -> str:
    return str(Fraction(x))


def _float(x: float):
    if x != x or x in (float("inf"), float("-inf")):
        return str(x)
    return float(f"{x:.12g}")


def encode(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, ExactScalar):
        if obj.im == 0:
            return rational(obj.re)
        return {"re": rational(obj.re), "im": rational(obj.im)}
    if isinstance(obj, ExactMatrix):
        return [[encode(x) for x in row] for row in obj.tolist()]
    if isinstance(obj, ExactPoly):
        return [encode(c) for c in obj.coeffs]
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _float(obj.real), "im": _float(obj.imag)}
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [encode(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj) if f.repr}
    if isinstance(obj, dict):
        return {_key(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def make_report(command: str, status: str, results) -> dict:
    return {"schema": SCHEMA, "command": command, "status": status, "results": encode(results)}


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def write_report(report: dict, name: str) -> Path | None:
    """Also store the report under $BWKIT_REPORT_DIR when that variable is set."""
    d = os.environ.get(REPORT_DIR_ENV)
    if not d:
        return None
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    out = path / f"{name}.json"
    out.write_text(dumps(report))
    return out
