"""Unitary ACMs of cubics.

Every cubic whose roots lie on the unit circle can be written as::

    z**3 - (1 + r2 e^{i th/2}) e^{-i eps} z**2
         + (1 + r2 e^{-i th/2}) e^{i th} e^{-2 i eps} z - e^{i(th - 3 eps)}

with ``0 <= r2 <= 2``.  Its roots are ``e^{-i eps}`` and ``e^{-i eps}`` times
the roots of ``z**2 - r2 e^{i th/2} z + e^{i th}``, and the block matrix built
from that quadratic is a unitary ACM.

``th`` enters through ``e^{i th/2}``, so it is kept in ``(-2pi, 2pi]``;
folding it into ``(-pi, pi]`` would flip the sign of the quadratic's middle
coefficient.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .branch import principal_arg
from .core import AcmError, CubicPoly, is_unitary
from .roots import roots_general

TWO_PI = 2 * math.pi
FOUR_PI = 4 * math.pi


def wrap_angle(a: float) -> float:
    """Reduce to ``(-pi, pi]``."""
    r = math.remainder(a, TWO_PI)
    return math.pi if r == -math.pi else r


def wrap_half_angle(a: float) -> float:
    """Reduce to ``(-2pi, 2pi]``, the period of ``e^{i a/2}``."""
    r = math.remainder(a, FOUR_PI)
    return TWO_PI if r == -TWO_PI else r


@dataclass(frozen=True)
class UnitaryParams:
    r2: float
    theta: float
    eps: float

    def __post_init__(self):
        for name in ("r2", "theta", "eps"):
            if not math.isfinite(getattr(self, name)):
                raise AcmError(f"{name} must be finite")
        if self.r2 < 0:
            raise AcmError("r2 must be non-negative")
        object.__setattr__(self, "theta", wrap_half_angle(self.theta))
        object.__setattr__(self, "eps", wrap_angle(self.eps))

    @property
    def in_unitary_range(self) -> bool:
        return self.r2 <= 2.0


@dataclass(frozen=True)
class Theorem3Structure:
    """``z**3 - r e^{i th1} z**2 + r e^{i(th - th1)} z - e^{i th}``."""

    r: float
    theta1: float
    theta: float


class Quadratic(NamedTuple):
    b: complex
    c: complex
    unitary: bool


class UnitaryAcm(NamedTuple):
    matrix: np.ndarray
    unitary: bool


def p2_unitary(r2: float, vartheta: float) -> Quadratic:
    """Coefficients of ``z**2 - r2 e^{i vartheta} z + e^{2 i vartheta}``.

    Both roots have modulus one iff ``0 <= r2 <= 2``; beyond that they share
    an argument and have reciprocal moduli.
    """
    e = cmath.exp(1j * vartheta)
    return Quadratic(-r2 * e, e * e, 0 <= r2 <= 2)


def arg_via_arctan(x: float, y: float) -> float:
    """Principal argument ``2*atan(y / (x + hypot(x, y)))``.

    For ``x < 0`` the same quantity is evaluated as ``2*atan((hypot - x)/y)``
    to avoid cancellation; the negative real axis returns ``+pi``.
    """
    h = math.hypot(x, y)
    if h == 0:
        raise AcmError("argument of zero undefined")
    if x >= 0:
        return 2 * math.atan(y / (x + h))
    if y == 0:
        return math.pi
    return 2 * math.atan((h - x) / y)


def theorem3_check(poly: CubicPoly, tol: float = 1e-9) -> Optional[Theorem3Structure]:
    """Necessary structure of a unitary characteristic polynomial.

    Holds iff ``|c3| = 1``, ``c2 = conj(c1) c3`` and ``|c1| <= 3``.
    """
    c1, c2, c3 = poly.coeffs
    if abs(abs(c3) - 1) > tol:
        return None
    if abs(c2 - c1.conjugate() * c3) > tol * max(1.0, abs(c2)):
        return None
    r = abs(c1)
    if r > 3 + tol:
        return None
    theta1 = principal_arg(-c1) if r > 0 else 0.0
    return Theorem3Structure(r, theta1, principal_arg(-c3))


def build_unitary_poly(params: UnitaryParams, strict: bool = True) -> CubicPoly:
    if strict and not params.in_unitary_range:
        raise AcmError(f"r2 = {params.r2!r} outside [0, 2]")
    r2, th, eps = params.r2, params.theta, params.eps
    h = cmath.exp(0.5j * th)
    e = cmath.exp(-1j * eps)
    return CubicPoly(
        -(1 + r2 * h) * e,
        (1 + r2 * h.conjugate()) * h * h * e * e,
        -(h * h) * e**3,
    )


def build_unitary_acm(params: UnitaryParams) -> UnitaryAcm:
    """Block ACM ``e^{-i eps} [[a, b, 0], [-b, a, 0], [0, 0, 1]]``.

    ``a = (r2/2) e^{i th/2}`` and ``b = sqrt(1 - (r2/2)**2) e^{i th/2}``.  For
    ``r2 > 2`` the square root is imaginary and the matrix is returned with
    ``unitary=False``.
    """
    half = params.r2 / 2
    h = cmath.exp(0.5j * params.theta)
    e = cmath.exp(-1j * params.eps)
    off = cmath.sqrt(complex(1 - half * half, 0.0))
    m = e * np.array(
        [[half * h, off * h, 0], [-off * h, half * h, 0], [0, 0, 1]], dtype=np.complex128
    )
    return UnitaryAcm(m, params.in_unitary_range and is_unitary(m, 1e-10))


def _merge_clusters(roots, radius):
    """Replace roots closer than ``radius`` to each other by their mean.

    Returns ``(values, moduli, singleton)`` in the original order.  The
    modulus of a cluster is the geometric mean of its members' moduli, which
    is exact for distinct unit roots and well conditioned for a perturbed
    multiple root.
    """
    n = len(roots)
    group = list(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radius:
                gi, gj = group[i], group[j]
                group = [gi if g == gj else g for g in group]
    values, moduli, single = [], [], []
    for i in range(n):
        members = [roots[k] for k in range(n) if group[k] == group[i]]
        values.append(sum(members) / len(members))
        moduli.append(math.prod(abs(z) for z in members) ** (1 / len(members)))
        single.append(len(members) == 1)
    return values, moduli, single


def _anchor_key(z):
    return (principal_arg(z), z.real, z.imag)


def recognize_unitary(poly: CubicPoly, tol: float = 1e-9) -> Optional[UnitaryParams]:
    """Parameters reproducing ``poly`` if all its roots have modulus one.

    Roots come from :func:`roots_general`.  Near-coincident roots are merged
    to their mean, which is far better conditioned than the individual
    members.  The anchor root ``e^{-i eps}`` is the simple root of smallest
    argument (the merged triple root if none is simple); ``r2`` and ``th``
    then follow from the coefficients rotated by ``e^{i eps}``.
    """
    roots = list(roots_general(poly).roots)
    scale = max(1.0, max(abs(r) for r in roots))
    merged, moduli, single = _merge_clusters(roots, 1e-4 * scale)
    if any(abs(m - 1) > tol for m in moduli):
        return None
    pool = [z for z, s in zip(merged, single) if s] or merged
    anchor = min(pool, key=_anchor_key)
    eps = wrap_angle(-principal_arg(anchor))

    # rotated polynomial has root 1 and -c1' = 1 + r2 e^{i vt} = r e^{i th1}
    s = -poly.c1 * cmath.exp(1j * eps)
    r, theta1 = abs(s), (principal_arg(s) if s != 0 else 0.0)
    x, y = -1 + r * math.cos(theta1), r * math.sin(theta1)
    r2 = math.sqrt(max(0.0, 1 + r * r - 2 * r * math.cos(theta1)))
    if r2 > 2 + math.sqrt(tol):
        return None
    r2 = min(r2, 2.0)
    vt = arg_via_arctan(x, y) if math.hypot(x, y) > 0 else 0.0
    # e^{i th} is fixed by the constant term; vt picks the branch of th/2
    half = principal_arg(-poly.c3 * cmath.exp(3j * eps)) / 2
    if abs(wrap_angle(half - vt)) > math.pi / 2:
        half += math.pi
    return UnitaryParams(r2, 2 * half, eps)
