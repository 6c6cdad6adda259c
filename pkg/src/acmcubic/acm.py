"""Almost-companion matrices (ACMs) of monic cubics.

For ``p != 0`` the ACM of ``eta**3 + p*eta + q`` is::

    s * [[0, 1, w], [1, 0, 1], [1/w, 1, 0]]

with ``s = sqrt(|p|/3) * exp(i*phi_p/2)``, ``phi_p = Arg(p) + pi`` and
``w = exp(i*Arccos(chi))``.  Its characteristic polynomial is
``eta**3 - 3 s**2 eta - 2 s**3 cos(Phi)`` which equals the target by the
choice of ``s`` and ``chi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branch import arccos_principal, principal_arg, principal_cbrt, principal_sqrt, unit_pair
from .core import AcmError, CubicPoly, depress

SQRT3 = math.sqrt(3.0)

# exp(-4i*pi/3) and exp(4i*pi/3)
_OMEGA_M = complex(-0.5, SQRT3 / 2)
_OMEGA_P = complex(-0.5, -SQRT3 / 2)
_P_ZERO_BLOCK = np.array(
    [[0, 1, 1], [-_OMEGA_M, 0, -1], [-_OMEGA_P, 1, 0]], dtype=np.complex128
)


class PZeroError(AcmError):
    pass


class NotHermitianError(AcmError):
    pass


def p_zero_threshold(q) -> float:
    return 1e-12 * max(1.0, abs(q) ** (2.0 / 3.0))


def is_p_zero(p, q) -> bool:
    return abs(p) <= p_zero_threshold(q)


def discriminant(p, q):
    """``p**3/27 + q**2/4``; non-positive means three real roots for real p, q."""
    return p**3 / 27 + q**2 / 4


def delta_band(p, q) -> float:
    """Width of the band around ``discriminant == 0`` treated as zero."""
    return 1e-12 * (1.0 + abs(p) ** 3 + abs(q) ** 2)


def prefactor(p) -> complex:
    """``sqrt(|p|/3) * exp(i*(Arg(p) + pi)/2)``, formed without evaluating exp."""
    return 1j * principal_sqrt(p) / SQRT3


def chi_of(p, q) -> complex:
    """``-i q exp(-3i Arg(p)/2) / (2 sqrt(|p|**3/27))``."""
    p, q = complex(p), complex(q)
    if is_p_zero(p, q):
        raise PZeroError("p_zero: use acm_p_zero")
    ap = abs(p)
    half = principal_sqrt(p) / math.sqrt(ap)  # exp(i*Arg(p)/2), exact on the axes
    return -1j * q * half.conjugate() ** 3 / (2 * math.sqrt(ap**3 / 27))


@dataclass(frozen=True)
class AcmParams:
    rho: float
    phi_p: float
    theta_p: float
    chi: complex
    phi13: complex


def acm_params(p, q) -> AcmParams:
    chi = chi_of(p, q)
    theta_p = principal_arg(p)
    return AcmParams(
        rho=math.sqrt(abs(p) / 3),
        phi_p=theta_p + math.pi,
        theta_p=theta_p,
        chi=chi,
        phi13=arccos_principal(chi).value,
    )


def acm_p_zero(q) -> np.ndarray:
    """ACM of ``eta**3 + q``.

    Scalar phase is ``exp(i*Arg(-i q)/3)``: with ``exp(i*Arg(i q)/3)`` the
    block determinant ``-i*sqrt(3)`` would give ``eta**3 - q`` instead.
    """
    q = complex(q)
    if q == 0:
        return np.zeros((3, 3), dtype=np.complex128)
    t = principal_cbrt(-1j * q / SQRT3)
    return t * _P_ZERO_BLOCK


def _from_unit_pair(s, w, winv) -> np.ndarray:
    return s * np.array([[0, 1, w], [1, 0, 1], [winv, 1, 0]], dtype=np.complex128)


def acm_canonical(p, q) -> np.ndarray:
    """ACM whose characteristic polynomial is ``eta**3 + p*eta + q``."""
    p, q = complex(p), complex(q)
    if is_p_zero(p, q):
        return acm_p_zero(q)
    w, winv = unit_pair(chi_of(p, q))
    return _from_unit_pair(prefactor(p), w, winv)


def acm_general(poly: CubicPoly) -> np.ndarray:
    """ACM of a monic cubic: the canonical ACM shifted by ``-c1/3``."""
    canon = depress(poly)
    return acm_canonical(canon.p, canon.q) - canon.shift * np.eye(3)


def hermitian_angle(p: float, q: float, one_minus_chi2: float | None = None) -> float:
    """Real ``Phi`` for ``discriminant(p, q) <= 0``.

    ``Phi = Arg(chi + i sqrt(1 - chi**2))``.  Near a double root ``1 - chi**2``
    loses all its digits when formed from ``chi``; callers that know it more
    accurately (it equals ``-27 * discriminant / (-p)**3``) can pass it in.
    """
    chi = -(3 * q / (2 * p)) * math.sqrt(-3 / p)
    chi = min(1.0, max(-1.0, chi))
    if one_minus_chi2 is None:
        return arccos_principal(chi).re_part
    return math.atan2(math.sqrt(max(0.0, one_minus_chi2)), chi)


def acm_hermitian(p: float, q: float, one_minus_chi2: float | None = None) -> np.ndarray:
    """Hermitian ACM ``-sqrt(|p|/3) * [[0,1,e^{iPhi}],[1,0,1],[e^{-iPhi},1,0]]``.

    See :func:`hermitian_angle` for ``one_minus_chi2``.
    """
    p, q = float(p), float(q)
    if discriminant(p, q) > delta_band(p, q):
        raise NotHermitianError(
            f"not Hermitian-admissible: discriminant {discriminant(p, q):.6g} > 0"
        )
    if p >= 0:
        if q != 0:
            raise NotHermitianError("not Hermitian-admissible: p >= 0 with q != 0")
        return np.zeros((3, 3), dtype=np.complex128)
    phi = hermitian_angle(p, q, one_minus_chi2)
    w = complex(math.cos(phi), math.sin(phi))
    return _from_unit_pair(-math.sqrt(-p / 3), w, w.conjugate())
