"""Root extraction for cubics through the ACM trigonometric angle.

No Cardano radicals are used.  With ``Phi = Arccos(chi)`` the scaled cubic
``t**3 - 3t - 2cos(Phi)`` has the root ``2cos(Phi/3)``; the other two
follow from the quadratic remainder.  Roots of the canonical cubic are
those values times the ACM prefactor.

:func:`oracle_roots` is an independent Durand-Kerner iteration used to
cross-check everything else.
"""
from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import _kernels
from .acm import (
    SQRT3,
    chi_of,
    delta_band,
    discriminant,
    hermitian_angle,
    is_p_zero,
    prefactor,
)
from .branch import complex_cos, principal_arg, principal_cbrt, principal_sqrt, unit_pair
from .core import AcmError, CubicPoly, PolyN, depress

OMEGA = complex(-0.5, SQRT3 / 2)


class Regime(str, enum.Enum):
    COMPLEX_GENERAL = "complex-general"
    P_ZERO = "p-zero"
    REAL_DELTA_NONPOS = "real-delta-nonpos"
    REAL_DELTA_POS_PGT0 = "real-delta-pos-pgt0"
    REAL_DELTA_POS_PLT0 = "real-delta-pos-plt0"


class RootClass(str, enum.Enum):
    THREE_DISTINCT_REAL = "three-distinct-real"
    REAL_WITH_DOUBLE = "real-with-double"
    ONE_REAL_TWO_CONJUGATE = "one-real-two-conjugate"


@dataclass(frozen=True)
class RadicalTerms:
    """Real intermediates of the positive-discriminant formulas.

    ``p > 0`` fills ``u, A, B, X, Y``; ``p < 0`` fills ``chi, C, nu``.
    """

    u: Optional[float] = None
    A: Optional[float] = None
    B: Optional[float] = None
    X: Optional[float] = None
    Y: Optional[float] = None
    chi: Optional[float] = None
    C: Optional[float] = None
    nu: Optional[float] = None


@dataclass(frozen=True)
class RootTriple:
    roots: tuple
    regime: Regime
    terms: Optional[RadicalTerms] = None

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return 3

    def __getitem__(self, k):
        return self.roots[k]


class OracleConvergenceError(AcmError):
    pass


# ---------------------------------------------------------------------------


def _trig_scaled_roots(chi) -> tuple[complex, complex, complex]:
    """Roots of ``t**3 - 3t - 2*chi`` in the order ``t1, t2, t3``."""
    w, _ = unit_pair(chi)
    phi = complex(principal_arg(w), -math.log(abs(w)))
    t1 = 2 * complex_cos(phi / 3)
    sn = cmath.sin(phi / 3)
    rad = SQRT3 * principal_sqrt(sn * sn)
    return t1, -t1 / 2 + rad, -t1 / 2 - rad


def _cube_roots(q) -> tuple[complex, complex, complex]:
    q = complex(q)
    if q.imag == 0.0:
        r = complex(float(np.cbrt(-q.real)), 0.0)
    else:
        r = principal_cbrt(-q)
    return r, r * OMEGA, r * OMEGA.conjugate()


def roots_canonical(p, q) -> RootTriple:
    """Roots of ``eta**3 + p*eta + q`` for complex ``p, q``."""
    p, q = complex(p), complex(q)
    if is_p_zero(p, q):
        return RootTriple(_cube_roots(q), Regime.P_ZERO)
    s = prefactor(p)
    ts = _trig_scaled_roots(chi_of(p, q))
    return RootTriple(tuple(s * t for t in ts), Regime.COMPLEX_GENERAL)


def roots_general(poly: CubicPoly) -> RootTriple:
    canon = depress(poly)
    tri = roots_canonical(canon.p, canon.q)
    return RootTriple(tuple(r - canon.shift for r in tri.roots), tri.regime)


def _real_coeffs(poly) -> tuple[float, float, float]:
    cs = poly.coeffs if isinstance(poly, CubicPoly) else tuple(complex(c) for c in poly)
    if any(complex(c).imag != 0.0 for c in cs):
        raise AcmError("roots_real needs real coefficients")
    return tuple(complex(c).real for c in cs)


def _reciprocal_pair(big: float, small: float) -> tuple[float, float]:
    """Cube roots of a pair with product 1, avoiding cancellation in the small one."""
    if abs(big) >= abs(small):
        a = float(np.cbrt(big))
        return a, 1.0 / a
    b = float(np.cbrt(small))
    return 1.0 / b, b


def roots_real(poly) -> RootTriple:
    """Roots of a real cubic, dispatching on the sign of the discriminant."""
    c1, c2, c3 = _real_coeffs(poly)
    canon = depress(CubicPoly(c1, c2, c3))
    p, q, shift = canon.p.real, canon.q.real, canon.shift.real

    if is_p_zero(p, q):
        return RootTriple(tuple(r - shift for r in _cube_roots(q)), Regime.P_ZERO)

    # p > 0 forces a positive discriminant even inside the tolerance band
    if p < 0 and discriminant(p, q) <= delta_band(p, q):
        rho = math.sqrt(-p / 3)
        phi = hermitian_angle(p, q)
        xs = tuple(
            complex(2 * rho * math.cos((phi + (2 * k + 1) * math.pi) / 3) - shift, 0.0)
            for k in (1, 2, 3)
        )
        return RootTriple(xs, Regime.REAL_DELTA_NONPOS)

    if p > 0:
        sp = math.sqrt(p)
        u = (3 * q / (2 * p)) * math.sqrt(3 / p)
        h = math.hypot(1.0, u)
        # A = cbrt(h - u), B = cbrt(h + u), A*B = 1
        if u >= 0:
            B, A = _reciprocal_pair(h + u, h - u)
        else:
            A, B = _reciprocal_pair(h - u, h + u)
        X, Y = A + B, (B - A) / SQRT3
        z1 = complex(sp * Y / 2 - shift, sp * X / 2)
        z2 = z1.conjugate()
        z3 = complex(-sp * Y - shift, 0.0)
        terms = RadicalTerms(u=u, A=A, B=B, X=X, Y=Y)
        return RootTriple((z1, z2, z3), Regime.REAL_DELTA_POS_PGT0, terms)

    rho = math.sqrt(-p / 3)
    chi = -(3 * q / (2 * p)) * math.sqrt(-3 / p)
    t = math.sqrt((chi - 1) * (chi + 1))
    if chi > 0:
        a, b = _reciprocal_pair(chi + t, chi - t)
    else:
        b, a = _reciprocal_pair(chi - t, chi + t)
    C = a + b
    im = math.sqrt(max(0.0, 3 * (C * C / 4 - 1)))
    z1 = complex(-rho * C - shift, 0.0)
    z2 = complex(rho * C / 2 - shift, rho * im)
    z3 = z2.conjugate()
    nu = math.log(abs(chi) + t)
    terms = RadicalTerms(chi=chi, C=C, nu=nu)
    return RootTriple((z1, z2, z3), Regime.REAL_DELTA_POS_PLT0, terms)


def classify(p: float, q: float) -> RootClass:
    d = discriminant(p, q)
    band = delta_band(p, q)
    if d > band:
        return RootClass.ONE_REAL_TWO_CONJUGATE
    if d < -band:
        return RootClass.THREE_DISTINCT_REAL
    return RootClass.REAL_WITH_DOUBLE


# ---------------------------------------------------------------------------
# real roots of a complex cubic


class RealRoot(NamedTuple):
    value: float
    double: bool


def real_roots_of_complex_cubic(poly: CubicPoly, tol: float = 1e-9) -> list[RealRoot]:
    """Real roots of a cubic with at least one non-real coefficient.

    A real root ``r`` must zero the imaginary part ``y1 r**2 + y2 r + y3``; each
    candidate is accepted when the full residual vanishes within ``tol``.
    ``double`` is set only when the derivative also vanishes there, which
    requires the imaginary-part quadratic to have a repeated root.
    """
    y1, y2, y3 = (c.imag for c in poly.coeffs)
    if y1 == 0.0 and y2 == 0.0 and y3 == 0.0:
        raise AcmError("real coefficients: use roots_real")

    repeated = False
    if y1 != 0.0:
        delta = y2 * y2 - 4 * y1 * y3
        if delta <= 1e-12 * (y2 * y2 + abs(4 * y1 * y3)):
            # no real zero of the imaginary part, up to rounding of y: the
            # vertex is the only candidate and the residual test decides
            cands = [-y2 / (2 * y1)]
            repeated = True
        else:
            sq = math.copysign(math.sqrt(delta), y2) if y2 != 0 else math.sqrt(delta)
            k = -(y2 + sq) / 2
            cands = [k / y1, y3 / k] if k != 0 else [sq / (2 * y1), -sq / (2 * y1)]
    elif y2 != 0.0:
        cands = [-y3 / y2]
    else:
        return []

    out = []
    for r in sorted(cands):
        if abs(poly(r)) <= tol * poly.scale(r):
            d_scale = max(1.0, 3 * r * r, abs(2 * poly.c1 * r), abs(poly.c2))
            double = repeated and abs(poly.derivative(r)) <= 1e-8 * d_scale
            out.append(RealRoot(r, double))
    return out


# ---------------------------------------------------------------------------
# Durand-Kerner oracle

ORACLE_MAX_ITER = 500
ORACLE_RESTARTS = 4
_SEED = complex(0.4, 0.9)


def _seeds(n: int, attempt: int) -> np.ndarray:
    base = _SEED ** np.arange(n)
    if attempt:
        base = base * (1.0 + 0.37 * attempt) * cmath.exp(0.61j * attempt)
    return base


def _residual_ok(coeffs: np.ndarray, z: np.ndarray, tol: float) -> bool:
    """``|P(z_k)| <= tol * sum_j |c_j| R**(n-j)`` for every root.

    ``R = max_k |z_k|`` is the root scale of the polynomial; using it instead
    of ``|z_k|`` keeps the test meaningful for a root at or near zero.
    """
    n = coeffs.size - 1
    big = float(np.max(np.abs(z)))
    powers = big ** np.arange(n, -1, -1)
    scale = float(np.sum(np.abs(coeffs) * powers))
    return all(abs(np.polyval(coeffs, zk)) <= tol * max(scale, 1e-300) for zk in z)


def oracle_roots_batch(coeffs, max_iter: int = ORACLE_MAX_ITER, tol: float = 1e-12) -> np.ndarray:
    """Durand-Kerner roots for a batch of monic polynomials.

    Parameters
    ----------
    coeffs : (N, n) array_like
        Non-leading coefficients ``c1..cn`` of each polynomial.

    Returns
    -------
    (N, n) complex array of roots.

    Raises
    ------
    OracleConvergenceError
        If some polynomial neither converges nor meets the residual test
        after every restart.
    """
    c = np.atleast_2d(np.asarray(coeffs, dtype=np.complex128))
    nb, n = c.shape
    full = np.hstack([np.ones((nb, 1), dtype=np.complex128), c])
    out = np.empty((nb, n), dtype=np.complex128)
    todo = np.arange(nb)
    for attempt in range(ORACLE_RESTARTS + 1):
        seeds = np.tile(_seeds(n, attempt), (todo.size, 1))
        z, _, _ = _kernels.durand_kerner(full[todo], seeds, max_iter, 1e-14)
        ok = np.array([_residual_ok(full[i], z[j], tol) for j, i in enumerate(todo)], dtype=bool)
        out[todo[ok]] = z[ok]
        todo = todo[~ok]
        if todo.size == 0:
            return out
    raise OracleConvergenceError(
        f"Durand-Kerner failed for {todo.size} polynomial(s) after {ORACLE_RESTARTS} restarts"
    )


def oracle_roots(poly) -> list[complex]:
    """Independent Durand-Kerner roots of a monic polynomial of any degree."""
    if isinstance(poly, CubicPoly):
        coeffs = poly.coeffs
    elif isinstance(poly, PolyN):
        coeffs = poly.coeffs
    else:
        coeffs = PolyN(tuple(poly)).coeffs
    return [complex(z) for z in oracle_roots_batch([coeffs])[0]]


def multiset_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Max pairwise distance under the best of all permutations of ``b``."""
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        raise ValueError("multisets of different size")
    return min(
        max(abs(x - y) for x, y in zip(a, perm)) for perm in itertools.permutations(b)
    )
