# -*- coding: utf-8 -*-
"""
Tests du problème de Robin limite, de la constante C* et de la majoration
par fonction test
"""
import numpy as np
import pytest

from core.convergence import richardson_extrapolate
from core.exceptions import ConfigError, DomainError
from modules import asymptotics
from modules.asymptotics import (
    RobinSolution,
    correction_integral,
    predicted_lambda,
    solve_robin,
    upper_bound_chain,
)
from modules.assembly import assemble_mass, assemble_two_phase
from modules.eigensolver import smallest_eigenpair
from modules.geometry import circle, ellipse
from modules.mesh import build_mesh, interior_submesh
from modules.radial import (
    RadialProblem,
    build_radial_grid,
    correction_constant_radial,
    robin_mu1,
    solve_two_phase_radial,
)

DISK_MU1, _ = robin_mu1(RadialProblem(R=1.0, n=2, alpha=1.0))


@pytest.fixture(scope="module")
def disk_ladder(unit_circle):
    """Solutions de Robin sur deux maillages emboîtés du disque unité"""
    return [
        solve_robin(build_mesh(unit_circle, 0.0, n, 4, levels), unit_circle, 1.0)
        for n, levels in ((64, 16), (128, 32))
    ]


class TestRobinLimit:

    def test_disk_matches_radial(self, disk_ladder):
        mu1 = richardson_extrapolate([sol.mu1 for sol in disk_ladder])
        np.testing.assert_allclose(mu1, DISK_MU1, rtol=2e-3)

    def test_eigenfunction_positive_and_normalized(self, disk_ladder):
        sol = disk_ladder[0]
        assert np.all(sol.w > 0.0)
        np.testing.assert_allclose(sol.w @ (assemble_mass(sol.mesh) @ sol.w), 1.0, rtol=1e-12)

    def test_trace_interpolation_is_periodic(self, disk_ladder):
        sol = disk_ladder[0]
        np.testing.assert_allclose(sol.trace_at(sol.trace_parameters), sol.trace)
        np.testing.assert_allclose(sol.trace_at(2.0 * np.pi + 0.1), sol.trace_at(0.1))

    def test_neumann_limit(self, disk_interior, unit_circle):
        sol = solve_robin(disk_interior, unit_circle, 1e-6)
        assert sol.mu1 < 1e-4
        assert sol.w.max() / sol.w.min() < 1.01

    def test_ellipse_bracketed_by_disks(self):
        curve = ellipse(2.0, 1.0)
        sol = solve_robin(build_mesh(curve, 0.0, 64, 4, 16), curve, 1.0)
        mu_small, _ = robin_mu1(RadialProblem(R=1.0, n=2, alpha=1.0))
        mu_large, _ = robin_mu1(RadialProblem(R=2.0, n=2, alpha=1.0))
        assert mu_large < sol.mu1 < mu_small

    def test_requires_positive_alpha(self, disk_interior, unit_circle):
        with pytest.raises(ConfigError):
            solve_robin(disk_interior, unit_circle, 0.0)


class TestCorrectionConstant:
    """C* = ∫_Γ (c_H·α·H + μ₁/3) w₁² √G₀"""

    @pytest.mark.parametrize("R, weight", [(1.0, 1.0), (2.0, 0.5), (2.0, -1.0)])
    def test_constant_trace_on_circle(self, R, weight):
        curve = circle(R)
        mesh = build_mesh(curve, 0.0, 32, 4, 8)
        c, mu1, alpha = 0.8, 0.7, 1.5
        sol = RobinSolution(mu1, np.full(mesh.n_nodes, c), alpha, mesh)
        expected = (-weight * alpha / R + mu1 / 3.0) * c ** 2 * 2.0 * np.pi * R
        np.testing.assert_allclose(correction_integral(sol, curve, weight), expected, rtol=1e-12)

    def test_disk_full_weight_matches_radial(self, disk_ladder, unit_circle):
        fine = disk_ladder[-1]
        mu1 = richardson_extrapolate([sol.mu1 for sol in disk_ladder])
        sol = RobinSolution(mu1, fine.w, fine.alpha, fine.mesh)
        expected = correction_constant_radial(RadialProblem(R=1.0, n=2, alpha=1.0), 1.0)
        np.testing.assert_allclose(correction_integral(sol, unit_circle, 1.0), expected, rtol=1e-2)

    def test_disk_default_weight(self, disk_ladder, unit_circle):
        fine = disk_ladder[-1]
        mu1 = richardson_extrapolate([sol.mu1 for sol in disk_ladder])
        sol = RobinSolution(mu1, fine.w, fine.alpha, fine.mesh)
        expected = correction_constant_radial(RadialProblem(R=1.0, n=2, alpha=1.0))
        assert abs(correction_integral(sol, unit_circle) - expected) < 5e-3

    def test_ellipse_self_convergence(self):
        curve = ellipse(2.0, 1.0)
        values = [
            correction_integral(solve_robin(build_mesh(curve, 0.0, n, 4, levels), curve, 1.0), curve)
            for n, levels in ((64, 16), (128, 32))
        ]
        assert abs(values[1] - values[0]) < 1e-2


class TestPrediction:

    def test_zero_thickness(self):
        assert predicted_lambda(1.5, 0.3, 0.0) == 1.5

    def test_ball(self):
        mu1, cstar = np.pi ** 2 / 4, np.pi ** 2 / 6 - 2.0
        np.testing.assert_allclose(predicted_lambda(mu1, cstar, 0.01), mu1 - 0.01 * cstar, rtol=1e-15)

    def test_vectorized(self):
        values = predicted_lambda(2.0, 1.0, np.array([0.1, 0.2]))
        np.testing.assert_allclose(values, [1.9, 1.8])

    def test_negative_thickness(self):
        with pytest.raises(DomainError):
            predicted_lambda(1.0, 1.0, -0.01)


class TestUpperBound:
    """λ₁(ε) ≤ Q(ũ) ≤ μ₁ + Cε"""

    @pytest.fixture(scope="class")
    def coated_disk(self, unit_circle):
        mesh = build_mesh(unit_circle, 0.02, 64, 4, 16)
        robin = solve_robin(interior_submesh(mesh), unit_circle, 1.0)
        pencil = assemble_two_phase(mesh, 1.0, 0.02)
        return mesh, robin, pencil, smallest_eigenpair(*pencil)

    def test_values_on_layer(self, coated_disk):
        mesh, robin, _, _ = coated_disk
        u = asymptotics.test_function_values(robin, mesh, 0.02)
        np.testing.assert_allclose(u[:mesh.n_interior_nodes], robin.w)
        np.testing.assert_allclose(u[mesh.outer_nodes], 0.0, atol=1e-15)

    def test_quotient_bracket(self, coated_disk):
        mesh, robin, pencil, pair = coated_disk
        quotient = asymptotics.test_function_quotient(robin, mesh, 1.0, 0.02, pencil=pencil)
        assert pair.value <= quotient
        assert quotient - robin.mu1 <= 0.05 * robin.mu1

    def test_split_matches_quotient(self, coated_disk):
        mesh, robin, pencil, _ = coated_disk
        split = asymptotics.test_function_split(robin, mesh, 1.0, 0.02)
        quotient = asymptotics.test_function_quotient(robin, mesh, 1.0, 0.02, pencil=pencil)
        np.testing.assert_allclose(split["quotient"], quotient, rtol=1e-10)
        # σ_ε∫_Σ|∇ũ|² ≈ α∮w₁²
        trace_energy = np.sum(robin.trace ** 2) * 2.0 * np.pi / len(robin.trace)
        np.testing.assert_allclose(split["layer_energy"], trace_energy, rtol=0.05)

    def test_mismatched_robin_mesh(self, coated_disk, disk_interior):
        mesh, _, _, _ = coated_disk
        other = solve_robin(disk_interior, disk_interior.curve, 1.0)
        with pytest.raises(ConfigError):
            asymptotics.test_function_values(other, mesh, 0.02)

    def test_radial_quotient_bracket(self):
        problem = RadialProblem(R=1.0, n=2, alpha=1.0, eps=0.01)
        grid = build_radial_grid(1.0, 0.01)
        mu1, profile = robin_mu1(problem)
        lam = solve_two_phase_radial(problem, grid).value
        quotient = asymptotics.radial_test_function_quotient(problem, grid, profile)
        assert lam <= quotient
        assert quotient - mu1 <= 0.05 * mu1

    def test_chain_synthetic(self):
        eps = [0.04, 0.02, 0.01]
        mu1 = 2.0
        quotients = [mu1 + 0.5 * e for e in eps]
        lambdas = [mu1 + 0.4 * e for e in eps]
        chain = upper_bound_chain(eps, lambdas, quotients, mu1)
        assert chain["lambda_below_quotient"]
        assert chain["slope_bounded"]
        np.testing.assert_allclose(chain["slopes"], 0.5)

    def test_chain_detects_blow_up(self):
        eps = [0.04, 0.02, 0.01]
        mu1 = 2.0
        quotients = [mu1 + 0.5 * 0.04, mu1 + 0.5 * 0.02, mu1 + 0.5]
        chain = upper_bound_chain(eps, [mu1] * 3, quotients, mu1)
        assert not chain["slope_bounded"]

    def test_chain_detects_violation(self):
        chain = upper_bound_chain([0.04, 0.02, 0.01], [2.1, 2.0, 2.0], [2.0, 2.01, 2.005], 2.0)
        assert not chain["lambda_below_quotient"]

    def test_chain_slopes_from_extrapolated_quotients(self):
        eps = [0.04, 0.02, 0.01]
        mu1 = [2.0, 2.0, 2.0]
        offset = 1e-3
        mesh_quotients = [2.0 + offset + 0.5 * e for e in eps]
        extrapolated = [2.0 + 0.5 * e for e in eps]
        lambdas = [2.0 + offset + 0.4 * e for e in eps]

        mixed = upper_bound_chain(eps, lambdas, mesh_quotients, mu1)
        assert mixed["slopes"][-1] > mixed["slopes"][0]

        chain = upper_bound_chain(eps, lambdas, mesh_quotients, mu1, slope_quotients=extrapolated)
        assert chain["lambda_below_quotient"]
        assert chain["slope_bounded"]
        np.testing.assert_allclose(chain["slopes"], 0.5)
