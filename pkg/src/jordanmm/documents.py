"""JSON document formats and validating parsers.

Wire formats:

  octonion        [c0, ..., c7]
  bioctonion      [[re, im] x 8]
  element         {"n", "ground", "diag", "upper"}   (upper row-major by rows)
  point / line    element plus {"kind": "point" | "line"}
  frame           {"eigenvalues", "multiplicities", "projections"}
  gauge algebra   {"dim", "entries": [[i, j, k, value], ...]}  (1-indexed, i<j<k)
  configuration   {"coupling", "elements": [element, ...]}

Parsers raise ValidationError; JSON syntax errors keep line/column info.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import GeometryError, JordanmmError, ValidationError
from .jordan_core import GROUND_DIMS, HermitianElement, canonical_ground
from .matrix_model import GaugeAlgebra, GaugeConfiguration
from .projective import ProjectiveLine, ProjectivePoint


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc


def canonical_json(obj) -> str:
    """Deterministic rendering used for all reports."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return obj


def _expect_keys(doc: dict, required, what: str) -> None:
    if not isinstance(doc, dict):
        raise ValidationError(f"{what} must be a JSON object, got {type(doc).__name__}")
    missing = [k for k in required if k not in doc]
    if missing:
        raise ValidationError(f"{what} is missing keys {missing}")


def _scalar(value, what: str, allow_complex: bool):
    if isinstance(value, (list, tuple)):
        if len(value) != 2 or not all(isinstance(v, (int, float)) for v in value):
            raise ValidationError(f"{what}: complex scalars are [re, im] pairs, got {value!r}")
        if not allow_complex and value[1] != 0:
            raise ValidationError(f"{what}: imaginary part not allowed for this ground")
        return complex(value[0], value[1]) if allow_complex else float(value[0])
    if not isinstance(value, (int, float)):
        raise ValidationError(f"{what}: expected a number, got {value!r}")
    return complex(value) if allow_complex else float(value)


def _entry(value, ground: str, what: str) -> np.ndarray:
    if not isinstance(value, (list, tuple)) or len(value) != 8:
        raise ValidationError(f"{what}: entries carry 8 coefficients, got {value!r}")
    width = GROUND_DIMS[ground]
    is_co = ground == "CO"
    coeffs = np.zeros(8, dtype=np.complex128 if is_co else np.float64)
    for i, v in enumerate(value):
        c = _scalar(v, f"{what}[{i}]", allow_complex=is_co)
        if i >= width and c != 0:
            raise ValidationError(f"{what}: coefficient {i} must vanish over ground {ground}")
        coeffs[i] = c
    return coeffs


def hermitian_from_dict(doc: dict, *, strict: bool = False) -> HermitianElement:
    _expect_keys(doc, ("n", "ground", "diag", "upper"), "element")
    try:
        ground = canonical_ground(doc["ground"])
    except JordanmmError as exc:
        raise ValidationError(str(exc)) from exc
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"element size must be a positive integer, got {n!r}")
    diag = doc["diag"]
    upper = doc["upper"]
    if not isinstance(diag, list) or len(diag) != n:
        raise ValidationError(f"diag must list {n} scalars")
    expected = n * (n - 1) // 2
    if not isinstance(upper, list) or len(upper) != expected:
        raise ValidationError(f"upper must list {expected} entries for n = {n}")
    diag_values = [_scalar(v, f"diag[{i}]", allow_complex=ground == "CO")
                   for i, v in enumerate(diag)]
    entries = [_entry(e, ground, f"upper[{i}]") for i, e in enumerate(upper)]
    try:
        return HermitianElement.from_parts(ground, diag_values, entries, strict=strict)
    except JordanmmError as exc:
        raise ValidationError(str(exc)) from exc


def parse_element(doc, *, strict: bool = False):
    """Dispatch on document shape: element, tagged point/line, or configuration."""
    if isinstance(doc, str):
        doc = load_json(doc)
    if not isinstance(doc, dict):
        raise ValidationError(f"expected a JSON object, got {type(doc).__name__}")
    if "elements" in doc:
        return configuration_from_dict(doc, strict=strict)
    kind = doc.get("kind")
    element = hermitian_from_dict(doc, strict=strict)
    if kind is None:
        return element
    try:
        if kind == "point":
            return ProjectivePoint(element)
        if kind == "line":
            return ProjectiveLine(element)
    except GeometryError as exc:
        raise ValidationError(f"document tagged {kind!r} violates its invariants: {exc}") from exc
    raise ValidationError(f"unknown element kind {kind!r}; expected 'point' or 'line'")


def point_from_dict(doc: dict) -> ProjectivePoint:
    value = parse_element(doc)
    if isinstance(value, HermitianElement):
        try:
            return ProjectivePoint(value)
        except GeometryError as exc:
            raise ValidationError(f"element is not a projective point: {exc}") from exc
    if not isinstance(value, ProjectivePoint):
        raise ValidationError(f"expected a point document, got {type(value).__name__}")
    return value


def line_from_dict(doc: dict) -> ProjectiveLine:
    value = parse_element(doc)
    if isinstance(value, HermitianElement):
        try:
            return ProjectiveLine(value)
        except GeometryError as exc:
            raise ValidationError(f"element is not a projective line: {exc}") from exc
    if not isinstance(value, ProjectiveLine):
        raise ValidationError(f"expected a line document, got {type(value).__name__}")
    return value


def configuration_from_dict(doc: dict, *, strict: bool = False) -> GaugeConfiguration:
    _expect_keys(doc, ("elements",), "configuration")
    if not isinstance(doc["elements"], list) or not doc["elements"]:
        raise ValidationError("configuration elements must be a nonempty list")
    elements = [hermitian_from_dict(e, strict=strict) for e in doc["elements"]]
    coupling = doc.get("coupling", 1.0)
    if not isinstance(coupling, (int, float)):
        raise ValidationError(f"coupling must be a number, got {coupling!r}")
    try:
        return GaugeConfiguration(elements, float(coupling))
    except JordanmmError as exc:
        raise ValidationError(str(exc)) from exc


def gauge_algebra_from_dict(doc: dict) -> GaugeAlgebra:
    _expect_keys(doc, ("dim", "entries"), "gauge algebra")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"gauge algebra dim must be a positive integer, got {dim!r}")
    if not isinstance(doc["entries"], list):
        raise ValidationError("gauge algebra entries must be a list")
    try:
        return GaugeAlgebra.from_entries(dim, doc["entries"])
    except JordanmmError as exc:
        raise ValidationError(str(exc)) from exc
