"""Coefficient and report file formats.

A coefficient document is JSON of the form

    {"kind": "boundary" | "interior" | "exterior",
     "n_min": int,
     "coeffs": [[re, im], ...],      # ascending in frequency
     "s": float}                     # optional Sobolev bookkeeping index

Interior documents start at frequency 0 (n_min = 0, entry i is the z^i
coefficient).  Exterior documents end at frequency -1 (n_min = -len), the
entry at frequency -m being the z^(-m) coefficient.  Reals round-trip through
the shortest-repr decimal that Python's json module emits, and documents are
always serialized with sorted keys so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import InvalidDataError
from .hardy import ExteriorFunction, InteriorFunction
from .spectral import BoundaryDistribution

__all__ = [
    "coefficients_to_doc",
    "doc_to_coefficients",
    "read_coefficient_file",
    "write_coefficient_file",
    "canonical_json",
    "write_report",
]

CoefficientObject = BoundaryDistribution | InteriorFunction | ExteriorFunction


def _pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(c.real), float(c.imag)] for c in values]


def _array(pairs, what: str) -> np.ndarray:
    try:
        arr = np.asarray([complex(re, im) for re, im in pairs], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{what}: coeffs must be a list of [re, im] pairs") from exc
    if not np.all(np.isfinite(arr)):
        raise InvalidDataError(f"{what}: non-finite coefficient")
    return arr


def coefficients_to_doc(obj: CoefficientObject) -> dict:
    """Serialize a coefficient container to its JSON document."""
    if isinstance(obj, BoundaryDistribution):
        return {"kind": "boundary", "n_min": int(obj.n_min), "coeffs": _pairs(obj.coeffs)}
    if isinstance(obj, InteriorFunction):
        return {
            "kind": "interior",
            "n_min": 0,
            "coeffs": _pairs(obj.coeffs),
            "s": float(obj.index),
        }
    if isinstance(obj, ExteriorFunction):
        coeffs = obj.coeffs[::-1] if obj.coeffs.size else np.zeros(1, dtype=complex)
        return {
            "kind": "exterior",
            "n_min": -len(coeffs),
            "coeffs": _pairs(coeffs),
            "s": float(obj.index),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def doc_to_coefficients(doc: dict) -> CoefficientObject:
    """Parse a coefficient document back into the matching container."""
    if not isinstance(doc, dict):
        raise ValueError("coefficient document must be a JSON object")
    kind = doc.get("kind")
    coeffs = _array(doc.get("coeffs", []), f"{kind} document")
    if coeffs.size == 0:
        raise ValueError("coefficient document carries no coefficients")
    n_min = doc.get("n_min")
    if not isinstance(n_min, int):
        raise ValueError("n_min must be an integer")
    index = doc.get("s", 0.0)
    if not (isinstance(index, (int, float)) and math.isfinite(index)):
        raise ValueError("index 's' must be a finite number")
    if kind == "boundary":
        return BoundaryDistribution(n_min, coeffs)
    if kind == "interior":
        if n_min != 0:
            raise ValueError(f"interior documents start at frequency 0, got n_min = {n_min}")
        return InteriorFunction(coeffs, float(index))
    if kind == "exterior":
        if n_min != -coeffs.size:
            raise ValueError(
                f"exterior documents must end at frequency -1 "
                f"(n_min = -len(coeffs)), got n_min = {n_min} with {coeffs.size} coeffs"
            )
        return ExteriorFunction(coeffs[::-1], float(index))
    raise ValueError(f"unknown coefficient kind {kind!r}")


def canonical_json(doc: dict) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"


def read_coefficient_file(path) -> CoefficientObject:
    with open(path, "r", encoding="utf-8") as handle:
        return doc_to_coefficients(json.load(handle))


def write_coefficient_file(path, obj: CoefficientObject) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(canonical_json(coefficients_to_doc(obj)))


def write_report(path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(canonical_json(doc))
