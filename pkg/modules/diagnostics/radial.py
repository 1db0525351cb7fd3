# -*- coding: utf-8 -*-
"""
Diagnostics du problème radial : énergie H² par projection spline C²,
et analogues 1D des quantités de couche (masse, résidu de Robin, c₁).
"""
from typing import Optional
import logging

import numpy as np
from scipy.interpolate import CubicSpline

from core.exceptions import NumericalError
from modules.radial import RadialGrid, RadialProblem, RadialProfile, RadialSolution, assemble_radial

logger = logging.getLogger(__name__)

_GAUSS_POINTS, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(4)


def _laplacian_energy(spline: CubicSpline, nodes: np.ndarray, n: int, sphere_measure: float) -> float:
    """∫|Φ″ + (n−1)Φ′/r|² |S^{n−1}| r^{n−1} dr par Gauss élément par élément"""
    a, b = nodes[:-1], nodes[1:]
    h = b - a
    r = 0.5 * (a + b)[:, None] + 0.5 * h[:, None] * _GAUSS_POINTS[None, :]
    laplacian = spline(r, 2) + (n - 1) * spline(r, 1) / r
    weights = 0.5 * h[:, None] * _GAUSS_WEIGHTS[None, :] * r ** (n - 1)
    return sphere_measure * float(np.sum(weights * laplacian ** 2))


def radial_h2_energy(
    nodes: np.ndarray,
    phi: np.ndarray,
    interface_index: int,
    n: int,
    sigma: float,
    sphere_measure: float
) -> float:
    """
    ∫_Ω|ΔΦ|² + σ∫_Σ|ΔΦ|² pour un profil nodal Φ(r).

    Une spline cubique est ajustée par région : prolongement pair en r = 0
    dans Ω, spline naturelle sur [R, R + ε] dans la couche.

    Raises:
        NumericalError: ajustement spline impossible
    """
    inner_r = nodes[:interface_index + 1]
    inner_phi = phi[:interface_index + 1]
    try:
        mirrored_r = np.concatenate([-inner_r[:0:-1], inner_r])
        mirrored_phi = np.concatenate([inner_phi[:0:-1], inner_phi])
        inner = CubicSpline(mirrored_r, mirrored_phi)
        energy = _laplacian_energy(inner, inner_r, n, sphere_measure)

        if interface_index < len(nodes) - 1:
            layer_r = nodes[interface_index:]
            layer = CubicSpline(layer_r, phi[interface_index:], bc_type="natural")
            energy += sigma * _laplacian_energy(layer, layer_r, n, sphere_measure)
    except ValueError as e:
        raise NumericalError(f"Échec de l'ajustement spline: {e}")
    return energy


def h2_energy(solution: RadialSolution) -> float:
    """Énergie de dérivées secondes d'une solution bi-phasique radiale"""
    problem, grid = solution.problem, solution.grid
    return radial_h2_energy(
        grid.nodes, solution.phi, grid.interface_index, problem.n, problem.sigma, problem.sphere_measure
    )


def profile_h2_energy(problem: RadialProblem, profile: RadialProfile, grid: RadialGrid) -> float:
    """Même énergie pour un profil de Robin échantillonné aux nœuds de Ω (vaut μ₁² à la limite)"""
    nodes = grid.nodes[:grid.interface_index + 1]
    return radial_h2_energy(nodes, profile(nodes), len(nodes) - 1, problem.n, 0.0, problem.sphere_measure)


def _sub_grid(grid: RadialGrid, start: int, stop: int) -> RadialGrid:
    return RadialGrid(grid.nodes[start:stop], 0, grid.R, grid.eps)


def radial_layer_mass(solution: RadialSolution) -> float:
    """∫_{Σ_ε}|Φ|² en coordonnées radiales"""
    i = solution.grid.interface_index
    _, mass = assemble_radial(solution.problem, _sub_grid(solution.grid, i, None), uniform_coefficient=True)
    phi = solution.phi[i:]
    return float(phi @ (mass @ phi))


def radial_layer_energy(solution: RadialSolution) -> float:
    """σ_ε∫_{Σ_ε}|Φ′|²"""
    i = solution.grid.interface_index
    stiffness, _ = assemble_radial(solution.problem, _sub_grid(solution.grid, i, None), uniform_coefficient=True)
    phi = solution.phi[i:]
    return solution.problem.sigma * float(phi @ (stiffness @ phi))


def _interior_operators(solution: RadialSolution):
    i = solution.grid.interface_index
    return assemble_radial(solution.problem, _sub_grid(solution.grid, 0, i + 1), uniform_coefficient=True)


def radial_robin_residual(solution: RadialSolution, eigenvalue: Optional[float] = None) -> float:
    """
    |Φ(R) + Φ′(R)/α|²·|Γ| avec Φ′(R) relevé variationnellement à partir
    de l'équation discrète de Ω au nœud d'interface.
    """
    problem = solution.problem
    eigenvalue = solution.value if eigenvalue is None else eigenvalue
    i = solution.grid.interface_index
    stiffness, mass = _interior_operators(solution)
    phi = solution.phi[:i + 1]
    load = stiffness @ phi - eigenvalue * (mass @ phi)
    flux = load[-1] / problem.interface_measure
    return float((phi[-1] + flux / problem.alpha) ** 2 * problem.interface_measure)


def radial_fourier_c1(solution: RadialSolution, profile: RadialProfile) -> float:
    """c₁ = ∫_Ω Φ w₁ avec la masse P1 de Ω"""
    i = solution.grid.interface_index
    _, mass = _interior_operators(solution)
    nodes = solution.grid.nodes[:i + 1]
    return float(solution.phi[:i + 1] @ (mass @ profile(nodes)))
