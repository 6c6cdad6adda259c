"""Almost-companion matrices (ACMs) of cubic polynomials.

Builds 3x3 matrices with a prescribed characteristic polynomial and reuses
the same trigonometric angle to extract roots.  Qutrit density matrices and
unitary matrices appear as the Hermitian and unitary special cases.
"""
from ._kernels import NUMBA_ENABLED
from .acm import (
    AcmParams,
    NotHermitianError,
    PZeroError,
    acm_canonical,
    acm_general,
    acm_hermitian,
    acm_p_zero,
    acm_params,
    chi_of,
    discriminant,
    is_p_zero,
    p_zero_threshold,
)
from .branch import (
    PrincipalArccos,
    arccos_principal,
    complex_cos,
    complex_exp,
    principal_arg,
    principal_cbrt,
    principal_sqrt,
)
from .core import (
    AcmError,
    CanonicalCubic,
    CubicPoly,
    PolyN,
    char_poly_3,
    depress,
    frobenius_companion,
    is_hermitian,
    is_unitary,
)
from .density import (
    DensityPolySpec,
    DensityReport,
    InadmissibleDensityError,
    density_acm,
    density_poly,
    is_admissible,
    validate_density,
)
from .roots import (
    OracleConvergenceError,
    RealRoot,
    Regime,
    RootClass,
    RootTriple,
    classify,
    multiset_distance,
    oracle_roots,
    real_roots_of_complex_cubic,
    roots_canonical,
    roots_general,
    roots_real,
)
from .unitary import (
    Theorem3Structure,
    UnitaryParams,
    arg_via_arctan,
    build_unitary_acm,
    build_unitary_poly,
    p2_unitary,
    recognize_unitary,
    theorem3_check,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
