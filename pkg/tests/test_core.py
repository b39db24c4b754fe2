import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtomo.core import (DensityMatrix, DomainError, Grid1D, OpticalTomogram,
                          PreconditionError, WaveFunction, WignerField, integrate_1d,
                          integrate_2d)
from symtomo import states


class TestGrid1D:
    def test_points_and_spacing(self):
        g = Grid1D(0.0, 1.0, 11)
        assert g.h == pytest.approx(0.1)
        assert g.points[0] == 0.0
        assert g.points[-1] == pytest.approx(1.0)
        assert np.all(np.diff(g.points) > 0)

    def test_point_formula_is_reproducible(self):
        g = Grid1D(-10.0, 30.0, 401)
        assert all(g.point(i) == g.min + i * g.h for i in range(g.n))
        np.testing.assert_array_equal(g.points, [g.point(i) for i in range(g.n)])

    @pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 5), (0, 0, 5), (0, np.inf, 3)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            Grid1D(*args)

    def test_parse(self):
        assert Grid1D.parse("-10:30:401") == Grid1D(-10.0, 30.0, 401)
        with pytest.raises(ValueError):
            Grid1D.parse("1:2")

    def test_refined_halves_step(self):
        g = Grid1D(-1, 1, 21)
        assert g.refined().h == pytest.approx(g.h / 2)


class TestIntegrate1D:
    def test_constant(self):
        g = Grid1D(0, 1, 11)
        assert integrate_1d(np.ones(11), g) == pytest.approx(1.0, abs=1e-15)

    def test_linear(self):
        g = Grid1D(0, 1, 101)
        assert integrate_1d(g.points, g) == pytest.approx(0.5, abs=1e-15)

    def test_gaussian_against_erf(self):
        g = Grid1D(-6, 6, 2001)
        exact = math.sqrt(math.pi) * math.erf(6.0)
        assert abs(integrate_1d(np.exp(-g.points ** 2), g) - exact) < 1e-8

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            integrate_1d(np.ones(5), Grid1D(0, 1, 6))

    @settings(max_examples=30, deadline=None)
    @given(a=st.floats(-5, 5), b=st.floats(-5, 5))
    def test_linearity(self, a, b):
        g = Grid1D(-2, 3, 57)
        f, h = np.sin(g.points), g.points ** 3
        lhs = integrate_1d(a * f + b * h, g)
        rhs = a * integrate_1d(f, g) + b * integrate_1d(h, g)
        assert lhs == pytest.approx(rhs, abs=1e-12 * (1 + abs(a) + abs(b)))

    def test_second_order_convergence(self):
        exact = 1 - math.cos(2.0)
        errors = []
        for n in (41, 81, 161):
            g = Grid1D(0, 2, n)
            errors.append(abs(integrate_1d(np.sin(g.points), g) - exact))
        for coarse, fine in zip(errors, errors[1:]):
            assert 3.5 <= coarse / fine <= 4.5


class TestIntegrate2D:
    def test_constant(self):
        g = Grid1D(0, 1, 21)
        assert integrate_2d(np.ones((21, 21)), g, g) == pytest.approx(1.0, abs=1e-14)

    def test_gaussian(self):
        g = Grid1D(-6, 6, 1201)
        q = g.points
        f = np.exp(-q[:, None] ** 2 - q[None, :] ** 2)
        exact = math.pi * math.erf(6.0) ** 2
        assert abs(integrate_2d(f, g, g) - exact) < 1e-8
        assert abs(integrate_2d(2 * f, g, g) - 2 * math.pi) < 1e-7

    def test_shape_mismatch(self):
        g = Grid1D(0, 1, 5)
        with pytest.raises(ValueError):
            integrate_2d(np.ones((5, 4)), g, g)


class TestWaveFunction:
    def test_norm_and_precondition(self, psi_grid, ground):
        psi = ground.wavefunction(psi_grid)
        assert psi.norm() == pytest.approx(1.0, abs=1e-12)
        bad = WaveFunction(psi_grid, 2 * psi.values)
        with pytest.raises(PreconditionError):
            bad.require_normalized()

    def test_band_limited_interpolation(self, psi_grid, excited):
        psi = excited.wavefunction(psi_grid)
        x = np.array([-1.2345, 0.0101, 2.71828])
        np.testing.assert_allclose(psi(x), excited.psi(x), atol=1e-12)
        with pytest.raises(DomainError):
            psi(11.0)

    def test_shift(self, psi_grid, ground):
        psi = ground.wavefunction(psi_grid)
        np.testing.assert_allclose(psi.shifted_samples(0.003), ground.psi(psi_grid.points + 0.003),
                                   atol=1e-12)


def test_wigner_field_bilinear_and_box():
    g = Grid1D(0, 1, 3)
    f = WignerField(g, g, np.add.outer(g.points, 2 * g.points))
    assert f(0.25, 0.75) == pytest.approx(0.25 + 1.5)
    with pytest.raises(DomainError):
        f(1.5, 0.0)
    assert f(1.5, 0.0, outside="zero") == 0.0
    with pytest.raises(ValueError):
        WignerField(g, g, np.ones((3, 3)) * 1j)


def test_density_matrix_of_pure_state(psi_grid):
    g = Grid1D(-8, 8, 161)
    psi = states.ground().psi(g.points)
    rho = DensityMatrix(g, np.outer(psi, psi.conj()))
    assert rho.trace() == pytest.approx(1.0, abs=1e-10)
    assert rho.hermiticity_defect() < 1e-15
    assert rho.purity() == pytest.approx(1.0, abs=1e-9)
    assert rho.fidelity(states.ground().psi) == pytest.approx(1.0, abs=1e-9)
    assert rho.min_eigenvalue() > -1e-12


def test_optical_tomogram_interpolates_and_refuses_outside(ground):
    xg = Grid1D(-8, 8, 801)
    tg = Grid1D(0, 2 * np.pi, 181)
    opt = OpticalTomogram.sample(ground.tomogram, xg, tg)
    for X, mu, nu in [(0.3, 1.0, 0.0), (-0.5, -0.6, 0.8), (1.0, 2.0, -1.0)]:
        assert opt(X, mu, nu) == pytest.approx(ground.tomogram(X, mu, nu), abs=2e-4)
    with pytest.raises(DomainError):
        opt(9.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        opt(0.0, 0.0, 0.0)
