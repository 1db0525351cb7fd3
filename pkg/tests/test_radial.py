# -*- coding: utf-8 -*-
"""
Tests du module Radial : Bessel, Robin radial, problème bi-phasique 1D
"""
import numpy as np
import pytest
from scipy import integrate

from core.exceptions import ConfigError, NumericalError
from modules.radial import (
    RadialProblem,
    bessel_j,
    bessel_j_series,
    bracketed_root,
    build_radial_grid,
    correction_constant_radial,
    first_bessel_zero,
    interface_flux_jump,
    refine_grid,
    richardson_lambda,
    robin_mu1,
    robin_residual_radial,
    solve_two_phase_radial,
)

J01 = 2.404825557695773
BALL = RadialProblem(R=1.0, n=3, alpha=1.0)
DISK = RadialProblem(R=1.0, n=2, alpha=1.0)


class TestBessel:
    """J₀, J₁ et recherche de racine encadrée"""

    def test_values_at_origin(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(1, 0.0) == 0.0

    @pytest.mark.parametrize("x", [0.3, 1.0, 2.5, 5.0, 9.0])
    def test_series_matches_scipy(self, x):
        for order in (0, 1):
            np.testing.assert_allclose(bessel_j_series(order, x), bessel_j(order, x), atol=1e-12)

    def test_parity(self):
        np.testing.assert_allclose(bessel_j(0, -1.3), bessel_j(0, 1.3))
        np.testing.assert_allclose(bessel_j(1, -1.3), -bessel_j(1, 1.3))

    def test_first_zero(self):
        zero = first_bessel_zero(0)
        np.testing.assert_allclose(zero, J01, rtol=1e-12)
        assert abs(bessel_j_series(0, zero)) < 1e-11

    def test_no_sign_change(self):
        with pytest.raises(NumericalError) as excinfo:
            bracketed_root(lambda x: x ** 2 + 1.0, (0.0, 1.0))
        assert excinfo.value.bracket == (0.0, 1.0)


class TestRobinRadial:
    """μ₁ = k² semi-analytique et constante C*"""

    def test_ball_forced_root(self):
        # α = 1/R : cot(k) = 0, k = π/2
        mu1, profile = robin_mu1(BALL)
        np.testing.assert_allclose(profile.k, np.pi / 2, rtol=1e-12)
        np.testing.assert_allclose(mu1, np.pi ** 2 / 4, rtol=1e-12)

    def test_disk_root(self):
        mu1, profile = robin_mu1(DISK)
        assert 0.0 < profile.k < J01
        assert abs(robin_residual_radial(DISK, profile.k)) < 1e-12
        np.testing.assert_allclose(mu1, 1.25578 ** 2, rtol=1e-4)

    def test_neumann_limit(self):
        problem = RadialProblem(R=1.0, n=2, alpha=1e-6)
        mu1, profile = robin_mu1(problem)
        assert mu1 < 1e-5
        np.testing.assert_allclose(profile(np.array([0.0, 0.5, 1.0])), 1.0 / np.sqrt(np.pi), rtol=1e-5)

    @pytest.mark.parametrize("problem", [DISK, BALL, RadialProblem(R=2.0, n=2, alpha=0.5)])
    def test_normalization(self, problem):
        _, profile = robin_mu1(problem)
        value, _ = integrate.quad(
            lambda r: profile(r) ** 2 * r ** (problem.n - 1), 0.0, problem.R, epsabs=1e-13
        )
        np.testing.assert_allclose(problem.sphere_measure * value, 1.0, rtol=1e-10)

    def test_profile_derivative(self):
        _, profile = robin_mu1(BALL)
        r, h = 0.6, 1e-6
        fd = (profile(r + h) - profile(r - h)) / (2.0 * h)
        np.testing.assert_allclose(profile.derivative(r), fd, rtol=1e-7)
        # Condition de Robin αw + w′ = 0 en r = R
        np.testing.assert_allclose(profile(1.0) + profile.derivative(1.0), 0.0, atol=1e-12)

    def test_ball_correction_constant(self):
        np.testing.assert_allclose(correction_constant_radial(BALL), np.pi ** 2 / 6 - 2.0, rtol=1e-12)
        np.testing.assert_allclose(correction_constant_radial(BALL, 1.0), np.pi ** 2 / 6 - 4.0, rtol=1e-12)
        # Poids −1 : (α/R + μ₁/3)·w₁(R)²·|Γ|
        np.testing.assert_allclose(correction_constant_radial(BALL, -1.0), 4.0 + np.pi ** 2 / 6, rtol=1e-12)

    def test_disk_correction_constant(self):
        mu1, profile = robin_mu1(DISK)
        j0, j1 = bessel_j(0, profile.k), bessel_j(1, profile.k)
        trace_sq = j0 ** 2 / (np.pi * (j0 ** 2 + j1 ** 2))
        expected = (-0.5 + mu1 / 3.0) * trace_sq * 2.0 * np.pi
        np.testing.assert_allclose(correction_constant_radial(DISK), expected, rtol=1e-12)
        np.testing.assert_allclose(correction_constant_radial(DISK), 0.0315, atol=5e-4)

    def test_neumann_correction_vanishes(self):
        assert correction_constant_radial(RadialProblem(R=1.0, n=2, alpha=0.0)) == 0.0

    @pytest.mark.parametrize("kwargs", [{"n": 4}, {"R": 0.0}, {"alpha": -1.0}, {"eps": 1.0}])
    def test_invalid_problem(self, kwargs):
        with pytest.raises(ConfigError):
            RadialProblem(**kwargs)


class TestRadialGrid:

    def test_interface_node_is_exact(self):
        grid = build_radial_grid(1.0, 0.01, 100, 16)
        assert grid.nodes[grid.interface_index] == 1.0
        assert grid.nodes[-1] == 1.01
        assert grid.layer_elements == 16
        assert np.all(np.diff(grid.nodes) > 0.0)

    def test_too_few_layer_elements(self):
        with pytest.raises(ConfigError):
            build_radial_grid(1.0, 0.01, 100, 4)

    def test_refine_doubles(self):
        grid = refine_grid(build_radial_grid(1.0, 0.02, 50, 8))
        assert grid.interior_elements == 100
        assert grid.layer_elements == 16


class TestTwoPhaseRadial:
    """Problème bi-phasique 1D avec Dirichlet en R + ε"""

    def test_uniform_coefficient_dirichlet(self):
        # Q ≡ 1 : premier mode de Dirichlet du disque de rayon R + ε
        problem = DISK.with_eps(0.01)
        solution = solve_two_phase_radial(problem, build_radial_grid(1.0, 0.01), uniform_coefficient=True)
        np.testing.assert_allclose(solution.value, (J01 / 1.01) ** 2, rtol=1e-3)

    def test_ball_close_to_robin(self):
        problem = BALL.with_eps(1e-3)
        solution = solve_two_phase_radial(problem, build_radial_grid(1.0, 1e-3))
        assert abs(solution.value - np.pi ** 2 / 4) < 0.02

    def test_ball_eigenvalue_above_robin(self):
        # C* < 0 pour la boule : λ₁(ε) > μ₁
        lam, values, _ = richardson_lambda(BALL.with_eps(0.01), levels=2)
        assert len(values) == 2
        assert lam > np.pi ** 2 / 4

    def test_richardson_improves(self):
        lam, values, _ = richardson_lambda(BALL.with_eps(0.02), levels=3, interior_elements=50, layer_elements=8)
        reference, _, _ = richardson_lambda(BALL.with_eps(0.02), levels=2, interior_elements=800, layer_elements=64)
        assert abs(lam - reference) < abs(values[-1] - reference)

    def test_profile_normalized_and_positive(self):
        solution = solve_two_phase_radial(DISK.with_eps(0.02), build_radial_grid(1.0, 0.02))
        assert solution.phi[-1] == 0.0
        assert np.all(solution.phi[:-1] > 0.0)

    def test_flux_jump_vanishes_under_refinement(self):
        problem = DISK.with_eps(0.02)
        coarse = solve_two_phase_radial(problem, build_radial_grid(1.0, 0.02, 100, 8))
        fine = solve_two_phase_radial(problem, build_radial_grid(1.0, 0.02, 400, 32))
        assert abs(interface_flux_jump(fine)) < abs(interface_flux_jump(coarse))

    def test_missing_layer(self):
        with pytest.raises(ConfigError):
            solve_two_phase_radial(DISK, build_radial_grid(1.0, 0.0))

    def test_grid_mismatch(self):
        with pytest.raises(ConfigError):
            solve_two_phase_radial(DISK.with_eps(0.02), build_radial_grid(1.0, 0.01))
