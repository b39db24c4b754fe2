import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import gaussian_tomogram_value, random_symplectic
from symtomo import states
from symtomo.core import DomainError, Grid1D, integrate_1d
from symtomo.evolution import evolve_oscillator
from symtomo.symplectic import (IDENTITY, SymplecticMatrix, apply_canonical, compose,
                                frame_matrix, inverse, rotation, scaling)

GROUND_T = states.ground().tomogram
angles = st.floats(-10, 10, allow_nan=False)


def test_invariant_enforced():
    with pytest.raises(ValueError, match="Sp"):
        SymplecticMatrix(1, 1, 1, 1)
    big = SymplecticMatrix(1e4, 9999.0 + 1e-9, 1.0, 1.0)
    assert big.det == pytest.approx(1.0, abs=1e-6)


class TestFrameMatrix:
    def test_identity(self):
        assert frame_matrix(1.0, 0.0) == IDENTITY

    def test_unit_determinant(self):
        assert abs(frame_matrix(2.0, 0.3).det - 1) <= 1e-14

    def test_exchange(self):
        assert frame_matrix(1.0, np.pi / 2).allclose(SymplecticMatrix(0, 1, -1, 0), atol=1e-16)

    def test_first_row_is_frame(self):
        m = frame_matrix(1.7, 0.4)
        assert (m.a, m.b) == pytest.approx((1.7 * np.cos(0.4), np.sin(0.4) / 1.7))

    @pytest.mark.parametrize("s", [0.0, -1.0])
    def test_positive_scale(self, s):
        with pytest.raises(DomainError):
            frame_matrix(s, 0.1)


class TestGroup:
    def test_identity_is_neutral(self):
        m = frame_matrix(2.0, 0.3)
        assert compose(m, IDENTITY) == m and compose(IDENTITY, m) == m

    def test_rotations_add(self):
        assert compose(rotation(0.4), rotation(1.1)).allclose(rotation(1.5), atol=1e-12)

    def test_inverse(self):
        m = frame_matrix(2.0, 0.3)
        assert compose(m, inverse(m)).allclose(IDENTITY, atol=1e-12)
        assert inverse(IDENTITY) == IDENTITY
        assert inverse(SymplecticMatrix(0, 1, -1, 0)) == SymplecticMatrix(0, -1, 1, 0)

    def test_random_inverse(self, rng):
        for _ in range(20):
            m = SymplecticMatrix.from_array(random_symplectic(rng))
            assert compose(m, inverse(m)).allclose(IDENTITY, atol=1e-12)
            assert abs(compose(m, m).det - 1) <= 1e-10

    def test_matmul_operator(self):
        a, b = frame_matrix(1.5, 0.2), rotation(-0.7)
        assert a @ b == compose(a, b)
        np.testing.assert_allclose((a @ b).as_array(), a.as_array() @ b.as_array())

    def test_rejects_other_types(self):
        with pytest.raises(TypeError):
            compose(IDENTITY, np.eye(2))

    def test_from_array_shape(self):
        with pytest.raises(ValueError):
            SymplecticMatrix.from_array(np.eye(3))


class TestCanonicalAction:
    def test_identity(self, rng):
        w = states.excited1().tomogram
        pts = rng.uniform(-2, 2, (10, 3))
        for X, mu, nu in pts:
            assert apply_canonical(w, IDENTITY)(X, mu, nu) == w(X, mu, nu)

    @given(angles)
    def test_ground_rotation_invariant(self, theta):
        w = apply_canonical(GROUND_T, rotation(theta))
        for X, mu, nu in [(0.3, 1.0, 0.2), (-1.0, 0.4, -0.9)]:
            assert w(X, mu, nu) == pytest.approx(GROUND_T(X, mu, nu), abs=1e-12)

    def test_scaling_stretches_position(self):
        w = apply_canonical(GROUND_T, scaling(2.0))
        X = np.linspace(-4, 4, 9)
        np.testing.assert_allclose(w(X, 1.0, 0.0),
                                   gaussian_tomogram_value(X, 1.0, 0.0, var_q=2.0), atol=1e-9)

    def test_composition_order(self, rng):
        w = states.coherent(0.7, -0.4).tomogram
        for _ in range(10):
            m1 = SymplecticMatrix.from_array(random_symplectic(rng))
            m2 = SymplecticMatrix.from_array(random_symplectic(rng))
            X, mu, nu = rng.uniform(-2, 2, 3)
            lhs = apply_canonical(apply_canonical(w, m1), m2)(X, mu, nu)
            rhs = apply_canonical(w, compose(m2, m1))(X, mu, nu)
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-13)

    def test_normalization_invariant(self, rng):
        g = Grid1D(-30, 30, 6001)
        w = states.squeezed(1.5).tomogram
        for _ in range(5):
            m = SymplecticMatrix.from_array(random_symplectic(rng))
            theta = rng.uniform(0, 2 * np.pi)
            vals = apply_canonical(w, m)(g.points, np.cos(theta), np.sin(theta))
            assert integrate_1d(vals, g) == pytest.approx(1.0, abs=1e-6)

    @given(st.floats(-7, 7, allow_nan=False))
    def test_rotation_is_oscillator_flow(self, t):
        w = states.coherent(1.0, 0.5).tomogram
        a = apply_canonical(w, rotation(t))
        b = evolve_oscillator(w, t)
        for X, mu, nu in [(0.2, 0.9, 0.3), (-0.5, -0.2, 1.1)]:
            assert a(X, mu, nu) == pytest.approx(b(X, mu, nu), abs=1e-12)

    def test_domain_exit_propagates(self):
        w = apply_canonical(states.shutter(1.0, 1.0).tomogram, SymplecticMatrix(0, 1, -1, 0))
        with pytest.raises(DomainError):
            w(0.0, 1.0, 0.0)
