import numpy as np
import pytest
from hypothesis import given

from acmcubic import CubicPoly, PolyN, char_poly_3, depress, frobenius_companion, is_hermitian, is_unitary
from acmcubic.core import AcmError, char_poly_3_batch, coerce_poly, poly_max_diff
from acmcubic.roots import multiset_distance, oracle_roots
from strategies import cubics

from conftest import SQRT3, random_complex


class TestCubicPoly:
    def test_coerces_to_complex(self):
        p = CubicPoly(1, 2.5, 3j)
        assert all(isinstance(c, complex) for c in p.coeffs)

    def test_evaluation_and_derivative(self):
        p = CubicPoly(-6, 11, -6)
        assert p(1) == 0 and p(2) == 0 and p(3) == 0
        assert p.derivative(2) == -1

    def test_from_roots(self):
        assert CubicPoly.from_roots(1, 1, 1) == CubicPoly(-3, 3, -1)

    def test_is_real(self):
        assert CubicPoly(1, 2, 3).is_real
        assert not CubicPoly(1, 2j, 3).is_real

    def test_coerce_poly(self):
        assert coerce_poly((1, 2, 3)) == CubicPoly(1, 2, 3)
        with pytest.raises(AcmError):
            coerce_poly((1, 2))


class TestCharPoly:
    def test_zero_matrix(self):
        assert char_poly_3(np.zeros((3, 3))) == CubicPoly(0, 0, 0)

    def test_identity(self):
        assert char_poly_3(np.eye(3)) == CubicPoly(-3, 3, -1)

    def test_q_zero_acm(self):
        # -sqrt(|p|/3) [[0,1,i],[1,0,1],[-i,1,0]] with p = -3
        m = -np.array([[0, 1, 1j], [1, 0, 1], [-1j, 1, 0]])
        assert poly_max_diff(char_poly_3(m), CubicPoly(0, -3, 0)) < 1e-15

    def test_trace_and_det_random(self, rng):
        ms = random_complex(rng, (10_000, 3, 3), -2, 2)
        c = char_poly_3_batch(ms)
        assert np.max(np.abs(c[:, 0] + np.trace(ms, axis1=1, axis2=2))) < 1e-14
        assert np.max(np.abs(c[:, 2] + np.linalg.det(ms))) < 1e-13

    def test_matches_numpy_poly(self, rng):
        for m in random_complex(rng, (50, 3, 3), -2, 2):
            expected = np.poly(m)[1:]
            assert np.allclose(char_poly_3(m).coeffs, expected, atol=1e-12)

    def test_rejects_wrong_shape(self):
        with pytest.raises(AcmError):
            char_poly_3(np.eye(2))


class TestFrobenius:
    def test_degree_one(self):
        m = frobenius_companion(PolyN((2 + 1j,)))
        assert m.shape == (1, 1) and m[0, 0] == -(2 + 1j)

    def test_layout(self):
        m = frobenius_companion(CubicPoly(0, -3, -2))
        expected = np.array([[0, 0, 2], [1, 0, 3], [0, 1, 0]], dtype=complex)
        assert np.array_equal(m, expected)
        assert char_poly_3(m) == CubicPoly(0, -3, -2)

    def test_density_polynomial(self):
        p = CubicPoly(-1, 11 / 36, -1 / 36)
        assert poly_max_diff(char_poly_3(frobenius_companion(p)), p) < 1e-16

    def test_higher_degree_eigenvalues(self):
        poly = PolyN((0, 0, 0, -1))
        ev = np.linalg.eigvals(frobenius_companion(poly))
        assert multiset_distance(ev, [1, 1j, -1, -1j]) < 1e-12

    @given(cubics)
    def test_right_inverse(self, poly):
        assert poly_max_diff(char_poly_3(frobenius_companion(poly)), poly) <= 1e-13


class TestDepress:
    def test_already_canonical(self):
        c = depress(CubicPoly(0, 2 - 1j, 5))
        assert (c.p, c.q, c.shift) == (2 - 1j, 5, 0)

    def test_density_polynomial(self):
        c = depress(CubicPoly(-1, 11 / 36, -1 / 36))
        assert abs(c.p + 1 / 36) < 1e-16
        assert abs(c.q) < 1e-16
        assert c.shift == -1 / 3

    def test_perfect_cube(self):
        c = depress(CubicPoly(3, 3, 1))
        assert (c.p, c.q, c.shift) == (0, 0, 1)

    @given(cubics)
    def test_undepress_round_trip(self, poly):
        assert poly_max_diff(depress(poly).undepress(), poly) <= 1e-14 * max(
            1.0, max(abs(c) for c in poly.coeffs) ** 3
        )

    def test_roots_shift_back(self, rng):
        for c in random_complex(rng, (200, 3)):
            poly = CubicPoly(*c)
            canon = depress(poly)
            eta = oracle_roots(CubicPoly(0, canon.p, canon.q))
            z = [e - canon.shift for e in eta]
            assert multiset_distance(z, oracle_roots(poly)) <= 1e-9 * (1 + np.max(np.abs(c)))


class TestPredicates:
    def test_identity(self):
        assert is_hermitian(np.eye(3), 1e-12)
        assert is_unitary(np.eye(3), 1e-12)

    def test_density_matrix_is_hermitian(self, rho_sixths):
        assert is_hermitian(rho_sixths, 1e-12)

    def test_non_unitary_block(self):
        k = np.sqrt(5) / 2
        w = np.array([[-1.5, -1j * k, 0], [1j * k, -1.5, 0], [0, 0, 1]])
        assert not is_unitary(w, 1e-9)
        # with a nonzero phase the same block is not Hermitian either
        assert not is_hermitian(np.exp(-0.3j) * w, 1e-9)

    def test_rotation_block_is_unitary(self):
        w = np.array([[0.5, SQRT3 / 2, 0], [-SQRT3 / 2, 0.5, 0], [0, 0, 1]])
        assert is_unitary(w, 1e-12)
        assert not is_hermitian(w, 1e-12)
