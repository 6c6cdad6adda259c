"""Principal-value complex functions.

All branches follow the principal interval ``(-pi, pi]`` for the argument.
A signed zero in the imaginary part is treated as ``+0`` so the negative
real axis always maps to ``+pi``.
"""
from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

from .core import AcmError


def _plus_zero(z) -> complex:
    z = complex(z)
    # -0.0 + 0.0 == +0.0
    return complex(z.real, z.imag + 0.0)


def principal_arg(z) -> float:
    z = _plus_zero(z)
    if z == 0:
        raise AcmError("argument of zero undefined")
    if z.imag == 0.0 and z.real < 0:
        return math.pi
    return math.atan2(z.imag, z.real)


def principal_sqrt(z) -> complex:
    """``|z|**(1/2) * exp(i*Arg(z)/2)``."""
    return cmath.sqrt(_plus_zero(z))


def principal_cbrt(z) -> complex:
    """``|z|**(1/3) * exp(i*Arg(z)/3)``; real and positive for ``z > 0``."""
    z = _plus_zero(z)
    if z == 0:
        return 0j
    r = float(np.cbrt(abs(z)))
    if z.imag == 0.0 and z.real > 0:
        return complex(r, 0.0)
    return r * cmath.exp(1j * principal_arg(z) / 3)


def complex_cos(z) -> complex:
    z = complex(z)
    a, b = z.real, z.imag
    return complex(math.cos(a) * math.cosh(b), -math.sin(a) * math.sinh(b))


def complex_exp(z) -> complex:
    z = complex(z)
    m = math.exp(z.real)
    return complex(m * math.cos(z.imag), m * math.sin(z.imag))


def unit_pair(chi) -> tuple[complex, complex]:
    """Return ``(exp(i*Phi), exp(-i*Phi))`` with ``Phi = Arccos(chi)``.

    ``exp(i*Phi) = chi + i*sqrt(1 - chi**2)`` with the principal root, and the
    partner ``chi - i*sqrt(1 - chi**2)`` is its reciprocal.  Whichever of the
    two is much smaller suffers cancellation, so it is rebuilt as the
    reciprocal of the other.
    """
    chi = _plus_zero(chi)
    s = principal_sqrt((1 - chi) * (1 + chi))
    a = chi + 1j * s
    b = chi - 1j * s
    if abs(a) < 0.5 * abs(b):
        a = 1 / b
    elif abs(b) < 0.5 * abs(a):
        b = 1 / a
    return _plus_zero(a), _plus_zero(b)


class PrincipalArccos(NamedTuple):
    re_part: float
    im_part: float

    @property
    def value(self) -> complex:
        return complex(self.re_part, self.im_part)


def arccos_principal(chi) -> PrincipalArccos:
    """Principal ``Arccos`` as ``Arg(w) - i*ln|w|`` with ``w = exp(i*Phi)``.

    Built from ``1 - chi**2`` (not ``chi**2 - 1``), so the cuts lie on the real
    axis outside ``[-1, 1]``.
    """
    w, _ = unit_pair(chi)
    return PrincipalArccos(principal_arg(w), -math.log(abs(w)))
