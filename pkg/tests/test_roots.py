import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from acmcubic import (
    AcmError,
    CubicPoly,
    OracleConvergenceError,
    PolyN,
    Regime,
    RootClass,
    classify,
    multiset_distance,
    oracle_roots,
    real_roots_of_complex_cubic,
    roots_canonical,
    roots_general,
    roots_real,
)
from acmcubic.roots import oracle_roots_batch
from strategies import cubics, real_cubics

from conftest import SQRT3, random_complex

MIXED_ROOTS = [(-SQRT3 + 5j) / 2, -(SQRT3 + 5j) / 2, SQRT3]
OMEGA = complex(-0.5, SQRT3 / 2)


def vieta_error(poly, roots):
    a, b, c = roots
    scale = max(1.0, max(abs(x) for x in poly.coeffs))
    return max(
        abs(a + b + c + poly.c1),
        abs(a * b + a * c + b * c - poly.c2),
        abs(a * b * c + poly.c3),
    ) / scale


class TestCanonical:
    def test_cube_roots_of_unity(self):
        t = roots_canonical(0, -1)
        assert t.regime is Regime.P_ZERO
        assert multiset_distance(t, [1, OMEGA, OMEGA.conjugate()]) < 1e-15

    def test_double_root(self):
        t = roots_canonical(-3, -2)
        assert multiset_distance(t, [-1, -1, 2]) < 1e-7

    def test_one_real_two_complex(self):
        t = roots_canonical(4, -7 * SQRT3)
        assert t.regime is Regime.COMPLEX_GENERAL
        assert multiset_distance(t, MIXED_ROOTS) < 1e-14

    @given(st.builds(complex, st.floats(-10, 10), st.floats(-10, 10)),
           st.builds(complex, st.floats(-10, 10), st.floats(-10, 10)))
    def test_residual(self, p, q):
        for r in roots_canonical(p, q):
            assert abs(r**3 + p * r + q) <= 1e-8 * (1 + abs(p) + abs(q))


class TestGeneral:
    def test_triple_root(self):
        assert multiset_distance(roots_general(CubicPoly(-3, 3, -1)), [1, 1, 1]) < 1e-15

    def test_density_polynomial(self):
        t = roots_general(CubicPoly(-1, 11 / 36, -1 / 36))
        assert multiset_distance(t, [1 / 6, 1 / 3, 1 / 2]) < 1e-15

    def test_one_real_two_complex(self):
        t = roots_general(CubicPoly(0, 4, -7 * SQRT3))
        assert multiset_distance(t, MIXED_ROOTS) < 1e-14

    @given(cubics)
    def test_vieta(self, poly):
        assert vieta_error(poly, roots_general(poly)) <= 1e-9 * max(1.0, max(abs(c) for c in poly.coeffs))

    def test_oracle_equivalence(self, rng):
        c = random_complex(rng, (10_000, 3))
        oracle = oracle_roots_batch(c)
        for row, o in zip(c, oracle):
            d = multiset_distance(roots_general(CubicPoly(*row)), o)
            assert d <= 1e-8 * (1 + np.max(np.abs(row)))

    def test_agrees_with_numpy_roots(self, rng):
        for row in random_complex(rng, (500, 3)):
            ref = np.roots(np.concatenate([[1], row]))
            assert multiset_distance(roots_general(CubicPoly(*row)), ref) < 1e-9


class TestReal:
    def test_double_root(self):
        t = roots_real(CubicPoly(0, -3, -2))
        assert t.regime is Regime.REAL_DELTA_NONPOS
        assert all(z.imag == 0 for z in t)
        assert multiset_distance(t, [-1, -1, 2]) < 1e-7

    def test_intermediates_one_real_root(self):
        t = roots_real(CubicPoly(0, 4, -7 * SQRT3))
        assert t.regime is Regime.REAL_DELTA_POS_PGT0
        terms = t.terms
        assert terms.u == pytest.approx(-63 / 16, abs=1e-12)
        assert terms.A == pytest.approx(2, abs=1e-12)
        assert terms.B == pytest.approx(0.5, abs=1e-12)
        assert terms.X == pytest.approx(2.5, abs=1e-12)
        assert terms.Y == pytest.approx(-SQRT3 / 2, abs=1e-12)
        assert multiset_distance(t, MIXED_ROOTS) < 1e-14
        # the real root is the third one when p > 0
        assert t[2].imag == 0 and t[2].real == pytest.approx(SQRT3)

    def test_negative_p_positive_discriminant(self):
        t = roots_real(CubicPoly(0, -3, 18))
        assert t.regime is Regime.REAL_DELTA_POS_PLT0
        assert t[0] == pytest.approx(-3, abs=1e-14)
        assert t.terms.C == pytest.approx(3, abs=1e-14)
        assert multiset_distance(t, oracle_roots(CubicPoly(0, -3, 18))) < 1e-12

    @given(real_cubics)
    def test_conjugate_closed(self, poly):
        t = list(roots_real(poly))
        assert multiset_distance(t, [z.conjugate() for z in t]) <= 1e-10 * max(1.0, max(abs(c) for c in poly.coeffs))

    @given(real_cubics)
    def test_real_member_by_regime(self, poly):
        t = roots_real(poly)
        if t.regime is Regime.REAL_DELTA_POS_PGT0:
            assert t[2].imag == 0 and t[0] == t[1].conjugate()
        elif t.regime is Regime.REAL_DELTA_POS_PLT0:
            assert t[0].imag == 0 and t[1] == t[2].conjugate()
        elif t.regime is Regime.REAL_DELTA_NONPOS:
            assert all(z.imag == 0 for z in t)

    def test_agrees_with_general(self, rng):
        c = rng.uniform(-5, 5, (10_000, 3))
        seen = set()
        for row in c:
            poly = CubicPoly(*row)
            t = roots_real(poly)
            seen.add(t.regime)
            scale = 1 + np.max(np.abs(row))
            assert multiset_distance(t, roots_general(poly)) <= 1e-9 * scale
        assert {Regime.REAL_DELTA_NONPOS, Regime.REAL_DELTA_POS_PGT0, Regime.REAL_DELTA_POS_PLT0} <= seen

    def test_cosh_identity(self, rng):
        n = 0
        while n < 1000:
            p = -rng.uniform(0.1, 10)
            q = rng.uniform(-50, 50)
            if p**3 / 27 + q**2 / 4 <= 1e-6:
                continue
            n += 1
            t = roots_real(CubicPoly(0, p, q))
            assert t.regime is Regime.REAL_DELTA_POS_PLT0
            terms = t.terms
            assert terms.C == pytest.approx(math.copysign(2 * math.cosh(terms.nu / 3), terms.chi), rel=1e-12)

    def test_rejects_complex(self):
        with pytest.raises(AcmError):
            roots_real(CubicPoly(0, 1j, 1))


class TestRealRootsOfComplex:
    def test_two_real_roots(self):
        out = real_roots_of_complex_cubic(CubicPoly(1j, -1, -1j))
        assert [r.value for r in out] == pytest.approx([-1, 1], abs=1e-15)
        assert not any(r.double for r in out)

    def test_no_real_root(self):
        assert real_roots_of_complex_cubic(CubicPoly(0, 0, -1j)) == []

    def test_double_real_root(self):
        # (z - 1)**2 (z - i): imaginary part -(z - 1)**2 has a repeated root
        poly = CubicPoly.from_roots(1, 1, 1j)
        out = real_roots_of_complex_cubic(poly)
        assert len(out) == 1
        assert out[0].value == pytest.approx(1, abs=1e-15) and out[0].double

    def test_linear_imaginary_part(self):
        # (z - 2)(z**2 + 1) + i(z - 2): y1 = 0, simple real root at 2
        poly = CubicPoly(-2, 1 + 1j, -2 - 2j)
        out = real_roots_of_complex_cubic(poly)
        assert [r.value for r in out] == [2.0]
        assert not out[0].double

    def test_real_input_redirects(self):
        with pytest.raises(AcmError, match="use roots_real"):
            real_roots_of_complex_cubic(CubicPoly(1, 2, 3))

    @given(st.floats(-5, 5, allow_subnormal=False), st.floats(-5, 5), st.floats(0.1, 5))
    def test_planted_real_root(self, r, a, b):
        poly = CubicPoly.from_roots(r, complex(a, b), complex(-a, b))
        out = real_roots_of_complex_cubic(poly)
        assert any(abs(x.value - r) <= 1e-8 * max(1.0, abs(r)) for x in out)
        for x in out:
            assert abs(poly(x.value)) <= 1e-9 * poly.scale(x.value)


class TestClassify:
    def test_examples(self):
        assert classify(-3, -2) is RootClass.REAL_WITH_DOUBLE
        assert classify(-1 / 36, 0) is RootClass.THREE_DISTINCT_REAL
        assert classify(4, -7 * SQRT3) is RootClass.ONE_REAL_TWO_CONJUGATE


class TestOracle:
    def test_triple_root(self):
        # a triple root is only determined to about eps**(1/3)
        assert multiset_distance(oracle_roots(CubicPoly(-3, 3, -1)), [1, 1, 1]) < 1e-4

    def test_density_polynomial(self):
        assert multiset_distance(oracle_roots(CubicPoly(-1, 11 / 36, -1 / 36)), [1 / 6, 1 / 3, 1 / 2]) < 1e-12

    def test_one_real_two_complex(self):
        assert multiset_distance(oracle_roots(CubicPoly(0, 4, -7 * SQRT3)), MIXED_ROOTS) < 1e-12

    def test_degree_n(self):
        assert multiset_distance(oracle_roots(PolyN((0, 0, 0, 0, -1))),
                                 [np.exp(2j * np.pi * k / 5) for k in range(5)]) < 1e-12
        assert oracle_roots([2]) == [-2]

    def test_non_convergence_is_reported(self):
        with pytest.raises(OracleConvergenceError):
            oracle_roots_batch([[0, 0, -1]], max_iter=1)

    def test_residuals(self, rng):
        for row in random_complex(rng, (200, 3)):
            poly = CubicPoly(*row)
            for z in oracle_roots(poly):
                assert abs(poly(z)) <= 1e-12 * sum(abs(c) * max(1, abs(z)) ** k for c, k in zip((1, *row), (3, 2, 1, 0)))


def test_multiset_distance_is_optimal():
    assert multiset_distance([1, 2, 3], [3, 1, 2]) == 0
    with pytest.raises(ValueError):
        multiset_distance([1], [1, 2])
