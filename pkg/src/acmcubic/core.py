"""Cubic polynomials and small complex matrices.

Complex scalars are plain Python ``complex``; matrices are ``(3, 3)``
``complex128`` numpy arrays.  Polynomials are monic and store their
coefficients highest-to-lowest after the implicit leading 1, so
``CubicPoly(c1, c2, c3)`` is ``z**3 + c1*z**2 + c2*z + c3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels


class AcmError(ValueError):
    """Base class for domain errors raised by this package."""


@dataclass(frozen=True)
class CubicPoly:
    c1: complex
    c2: complex
    c3: complex

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[complex, complex, complex]:
        return (self.c1, self.c2, self.c3)

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0.0 for c in self.coeffs)

    def __call__(self, z):
        return ((z + self.c1) * z + self.c2) * z + self.c3

    def derivative(self, z):
        return (3 * z + 2 * self.c1) * z + self.c2

    def scale(self, z) -> float:
        """Magnitude of the largest term, for residual tolerances."""
        a = abs(z)
        return max(1.0, a**3, abs(self.c1) * a * a, abs(self.c2) * a, abs(self.c3))

    @classmethod
    def from_roots(cls, r1, r2, r3) -> "CubicPoly":
        return cls(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3))


@dataclass(frozen=True)
class CanonicalCubic:
    """``eta**3 + p*eta + q`` with ``eta = z + shift`` and ``shift = c1/3``."""

    p: complex
    q: complex
    shift: complex

    def undepress(self) -> CubicPoly:
        s = self.shift
        return CubicPoly(3 * s, 3 * s * s + self.p, s**3 + self.p * s + self.q)


@dataclass(frozen=True)
class PolyN:
    """Monic polynomial of degree ``n = len(coeffs)``."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        if len(cs) < 1:
            raise AcmError("degree must be at least 1")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __call__(self, z):
        acc = 1.0 + 0j
        for c in self.coeffs:
            acc = acc * z + c
        return acc


def as_matrix3(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.shape != (3, 3):
        raise AcmError(f"expected a 3x3 matrix, got shape {a.shape}")
    return a


def char_poly_3(m) -> CubicPoly:
    """Characteristic polynomial of a 3x3 matrix by cofactor expansion.

    ``c1 = -tr(m)``, ``c2`` is the sum of the principal 2x2 minors and
    ``c3 = -det(m)``.
    """
    c = _kernels.charpoly3(as_matrix3(m)[None])[0]
    return CubicPoly(c[0], c[1], c[2])


def char_poly_3_batch(ms) -> np.ndarray:
    """Vectorised :func:`char_poly_3` for an ``(N, 3, 3)`` stack; returns ``(N, 3)``."""
    return _kernels.charpoly3(ms)


def frobenius_companion(poly) -> np.ndarray:
    """Frobenius companion matrix: ones on the subdiagonal, last column
    ``(-c_n, ..., -c_1)`` from top to bottom."""
    if isinstance(poly, CubicPoly):
        coeffs = poly.coeffs
    elif isinstance(poly, PolyN):
        coeffs = poly.coeffs
    else:
        coeffs = PolyN(tuple(poly)).coeffs
    n = len(coeffs)
    m = np.zeros((n, n), dtype=np.complex128)
    if n > 1:
        m[np.arange(1, n), np.arange(n - 1)] = 1.0
    m[:, -1] = [-c for c in reversed(coeffs)]
    return m


def depress(poly: CubicPoly) -> CanonicalCubic:
    c1, c2, c3 = poly.coeffs
    p = c2 - c1 * c1 / 3
    q = 2 * c1**3 / 27 - c1 * c2 / 3 + c3
    return CanonicalCubic(p, q, c1 / 3)


def max_abs(m) -> float:
    """Maximum entrywise modulus, the matrix norm used for tolerance checks."""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def is_hermitian(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    return max_abs(m - m.conj().T) <= tol


def is_unitary(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    return max_abs(m @ m.conj().T - np.eye(m.shape[0])) <= tol


def poly_max_diff(a: CubicPoly, b: CubicPoly) -> float:
    return max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs))


def coerce_poly(obj) -> CubicPoly:
    if isinstance(obj, CubicPoly):
        return obj
    c: Sequence = tuple(obj)
    if len(c) != 3:
        raise AcmError("a cubic needs exactly three coefficients")
    return CubicPoly(*c)
