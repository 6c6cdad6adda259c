"""Qutrit density matrices built as Hermitian ACMs.

A density matrix has characteristic polynomial ``x**3 - x**2 + a**2 x - b**2``
(trace one, non-negative real roots).  When the depressed form has a
non-positive discriminant the Hermitian ACM shifted by ``1/3`` is a density
matrix with exactly those populations.
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np

from .acm import acm_hermitian
from .core import AcmError, CubicPoly, as_matrix3, char_poly_3, depress, is_hermitian
from .roots import roots_general, roots_real


class InadmissibleDensityError(AcmError):
    def __init__(self, reason: str):
        super().__init__(f"inadmissible density polynomial: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class DensityPolySpec:
    a: float
    b: float
    # exact squares when built from them; sqrt followed by squaring is lossy
    _a2: float | None = field(default=None, repr=False, compare=False)
    _b2: float | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_squares(cls, a2: float, b2: float) -> "DensityPolySpec":
        if a2 < 0 or b2 < 0:
            raise AcmError("a**2 and b**2 must be non-negative")
        return cls(math.sqrt(a2), math.sqrt(b2), float(a2), float(b2))

    @property
    def a2(self) -> float:
        return self.a * self.a if self._a2 is None else self._a2

    @property
    def b2(self) -> float:
        return self.b * self.b if self._b2 is None else self._b2

    @property
    def zero_roots(self) -> int:
        """Number of vanishing populations implied by ``a`` and ``b``."""
        if self.b != 0:
            return 0
        return 2 if self.a == 0 else 1


def density_poly(spec: DensityPolySpec) -> CubicPoly:
    return CubicPoly(-1.0, spec.a2, -spec.b2)


def _exact_canonical(spec: DensityPolySpec) -> tuple[float, float, float]:
    """``(p, q, 1 - chi**2)`` of the depressed polynomial, rounded once.

    Evaluated in exact rational arithmetic on the (binary) coefficients.
    Near degenerate populations ``q`` and ``1 - chi**2`` come from heavy
    cancellation; rounding only at the end keeps the eigenvalues as accurate
    as the coefficients allow.  ``1 - chi**2`` is ``disc / (4 (-p)**3)`` with
    ``disc = prod (x_i - x_j)**2``; it is ``nan`` when ``p >= 0``.
    """
    a2, b2 = Fraction(spec.a2), Fraction(spec.b2)
    p = a2 - Fraction(1, 3)
    q = Fraction(-2, 27) + a2 / 3 - b2
    disc = 18 * a2 * b2 - 4 * b2 + a2 * a2 - 4 * a2**3 - 27 * b2 * b2
    omc = float(disc / (4 * (-p) ** 3)) if p < 0 else math.nan
    return float(p), float(q), omc


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_admissible(poly: CubicPoly, tol: float = 1e-10) -> Admissibility:
    """Whether ``poly`` is the characteristic polynomial of some density matrix."""
    if not poly.is_real:
        raise AcmError("density polynomials have real coefficients")
    c1, c2, c3 = (c.real for c in poly.coeffs)
    if abs(c1 + 1) > tol:
        return Admissibility(False, f"trace must be 1 (c1 = {c1!r}, expected -1)")
    if c2 < -tol:
        return Admissibility(False, f"c2 = {c2!r} must be >= 0")
    if c3 > tol:
        return Admissibility(False, f"c3 = {c3!r} must be <= 0")
    canon = depress(poly)
    p, q = canon.p.real, canon.q.real
    bound = -1.5 * float(np.cbrt(2 * q * q))
    slack = tol * (1 + abs(q) ** (2.0 / 3.0))
    if p > bound + slack:
        return Admissibility(
            False, f"p = {p!r} exceeds -(3/2)*cbrt(2 q^2) = {bound!r}: roots not all real"
        )
    return Admissibility(True)


def density_acm(spec: DensityPolySpec) -> np.ndarray:
    """Density matrix with characteristic polynomial ``density_poly(spec)``.

    The canonical form and the angle of the Hermitian core are evaluated
    exactly from the coefficients (see :func:`_exact_canonical`), so nearly
    degenerate populations are not limited to ``sqrt(eps)`` accuracy.
    """
    poly = density_poly(spec)
    verdict = is_admissible(poly)
    if not verdict:
        raise InadmissibleDensityError(verdict.reason)
    p, q, one_minus_chi2 = _exact_canonical(spec)
    if p >= 0:
        p, one_minus_chi2 = 0.0, None
    try:
        core = acm_hermitian(p, q, one_minus_chi2)
    except AcmError:
        # inside the slack of the admissibility test: triple root 1/3
        core = np.zeros((3, 3), dtype=np.complex128)
    return core + np.eye(3) / 3


@dataclass
class DensityReport:
    hermitian: bool
    unit_trace: bool
    psd: bool
    eigenvalues: list = field(default_factory=list)
    trace: complex = 0j

    @property
    def ok(self) -> bool:
        return self.hermitian and self.unit_trace and self.psd

    def as_dict(self) -> dict:
        return {
            "hermitian": self.hermitian,
            "unit_trace": self.unit_trace,
            "psd": self.psd,
            "ok": self.ok,
        }


def validate_density(m, tol: float = 1e-10) -> DensityReport:
    """Check Hermiticity, unit trace and positive semi-definiteness of ``m``.

    Eigenvalues come from the cubic root formulas applied to the
    characteristic polynomial.  They are only accurate to about ``sqrt(eps)``
    next to a double eigenvalue, so positivity is decided on coefficients
    instead: the eigenvalues of a Hermitian matrix are all ``>= -tol`` iff
    the characteristic polynomial of ``m + tol*I`` has alternating signs.
    Only rounding-level violations of the sign pattern are forgiven.
    """
    m = as_matrix3(m)
    herm = is_hermitian(m, tol)
    poly = char_poly_3(m)
    if herm:
        real = CubicPoly(*(c.real for c in poly.coeffs))
        eig = list(roots_real(real))
    else:
        eig = list(roots_general(poly))
    tr = complex(np.trace(m))
    unit = abs(tr - 1) <= tol
    psd = False
    if herm:
        c1, c2, c3 = (c.real for c in char_poly_3(m + tol * np.eye(3)).coeffs)
        s = max(1.0, float(np.max(np.abs(m))))
        slack = 8 * np.finfo(float).eps
        psd = c1 <= slack * s and c2 >= -slack * s**2 and c3 <= slack * s**3
    return DensityReport(herm, unit, bool(psd), eig, tr)
