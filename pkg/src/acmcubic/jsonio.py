"""JSON encoding for the public value types.

Complex scalars are ``[re, im]`` pairs, a cubic is ``{"c1", "c2", "c3"}``
and a matrix is a row-major nested list of pairs.  Structural checks use the
schema shipped in ``schemas/acmcubic.schema.json``; every failure is reported
with the JSON path of the offending field.
"""
from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources

import numpy as np
from jsonschema import Draft202012Validator

from .core import CubicPoly, PolyN
from .unitary import UnitaryParams


class MalformedInputError(Exception):
    """Input that does not parse; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


@lru_cache(maxsize=None)
def schema_document() -> dict:
    text = resources.files("acmcubic").joinpath("schemas/acmcubic.schema.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _validator(kind: str) -> Draft202012Validator:
    doc = schema_document()
    if kind not in doc["$defs"]:
        raise KeyError(kind)
    return Draft202012Validator({"$ref": f"#/$defs/{kind}", "$defs": doc["$defs"]})


def _path_str(root: str, parts) -> str:
    out = root
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def validate(obj, kind: str, root: str = "$") -> None:
    """Raise :class:`MalformedInputError` unless ``obj`` matches ``kind``."""
    errors = sorted(_validator(kind).iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise MalformedInputError(_path_str(root, err.absolute_path), err.message)


def _finite(x, path):
    x = float(x)
    if not math.isfinite(x):
        raise MalformedInputError(path, "non-finite number")
    return x


# ---------------------------------------------------------------------------
# decoding


def complex_from_json(obj, root: str = "$") -> complex:
    validate(obj, "complex", root)
    return complex(_finite(obj[0], f"{root}[0]"), _finite(obj[1], f"{root}[1]"))


def poly_from_json(obj, root: str = "$") -> CubicPoly:
    validate(obj, "cubic_poly", root)
    return CubicPoly(*(complex_from_json(obj[k], f"{root}.{k}") for k in ("c1", "c2", "c3")))


def polyn_from_json(obj, root: str = "$"):
    """A cubic object or a list of ``c1..cn`` pairs."""
    if isinstance(obj, dict):
        return poly_from_json(obj, root)
    validate(obj, "poly_n", root)
    return PolyN(tuple(complex_from_json(c, f"{root}[{i}]") for i, c in enumerate(obj)))


def matrix_from_json(obj, root: str = "$") -> np.ndarray:
    validate(obj, "matrix3", root)
    return np.array(
        [[complex_from_json(v, f"{root}[{i}][{j}]") for j, v in enumerate(row)]
         for i, row in enumerate(obj)],
        dtype=np.complex128,
    )


def params_from_json(obj, root: str = "$") -> UnitaryParams:
    validate(obj, "unitary_params", root)
    vals = {k: _finite(obj[k], f"{root}.{k}") for k in ("r2", "theta", "eps")}
    return UnitaryParams(**vals)


def loads(text: str, root: str = "$"):
    """``json.loads`` that reports syntax errors as malformed input."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(root, f"invalid JSON ({exc.msg} at char {exc.pos})") from None


# ---------------------------------------------------------------------------
# encoding


def _num(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot encode non-finite number {x!r}")
    return x + 0.0  # drop the sign of zero


def complex_to_json(z) -> list:
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def poly_to_json(poly: CubicPoly) -> dict:
    return {k: complex_to_json(c) for k, c in zip(("c1", "c2", "c3"), poly.coeffs)}


def matrix_to_json(m) -> list:
    return [[complex_to_json(v) for v in row] for row in np.asarray(m)]


def params_to_json(params: UnitaryParams) -> dict:
    return {"r2": _num(params.r2), "theta": _num(params.theta), "eps": _num(params.eps)}


def dumps(doc, indent=None) -> str:
    """Deterministic serialization: sorted keys, shortest round-trip floats."""
    return json.dumps(doc, sort_keys=True, indent=indent, allow_nan=False)
