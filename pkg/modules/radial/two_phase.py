# -*- coding: utf-8 -*-
"""
Problème bi-phasique radial : éléments finis P1 en r avec poids r^{n−1},
nœud exact à l'interface r = R, Dirichlet en r = R + ε.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple
import logging

import numpy as np
import scipy.sparse as sp

from config.solver import RADIAL_CONFIG
from core.convergence import richardson_extrapolate
from core.exceptions import ConfigError
from modules.eigensolver import EigenPair, smallest_eigenpair
from .robin import RadialProblem

logger = logging.getLogger(__name__)

# Gauss–Legendre à 3 points : exact pour les polynômes de degré ≤ 5
_GAUSS_POINTS, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(3)


@dataclass(frozen=True)
class RadialGrid:
    """Nœuds 0 = r₀ < … < r_M = R + ε, avec r_{interface_index} = R exactement"""
    nodes: np.ndarray
    interface_index: int
    R: float
    eps: float
    grading: float = RADIAL_CONFIG["grading"]

    @property
    def layer_elements(self) -> int:
        return len(self.nodes) - 1 - self.interface_index

    @property
    def interior_elements(self) -> int:
        return self.interface_index


@dataclass
class RadialSolution:
    """λ₁(ε) et profil nodal Φ (Φ(R + ε) = 0), normalisé sur Ω_ε et positif"""
    problem: RadialProblem
    grid: RadialGrid
    value: float
    phi: np.ndarray
    pair: EigenPair
    uniform_coefficient: bool = False


def _graded(n_elements: int, ratio: float) -> np.ndarray:
    """
    Points s ∈ [0, 1] raffinés géométriquement vers s = 0 : la taille des
    éléments croît d'un facteur total `ratio`. Application lisse de s uniforme,
    de sorte que doubler n_elements divise l'erreur P1 par ~4.
    """
    s = np.linspace(0.0, 1.0, n_elements + 1)
    if ratio == 1.0:
        return s
    return (ratio ** s - 1.0) / (ratio - 1.0)


def build_radial_grid(
    R: float,
    eps: float,
    interior_elements: Optional[int] = None,
    layer_elements: Optional[int] = None,
    grading: Optional[float] = None,
    layer_grading: Optional[float] = None
) -> RadialGrid:
    """
    Grille radiale raffinée vers r = R des deux côtés.

    Raises:
        ConfigError: moins de `min_layer_elements` éléments dans la couche,
            rapport de gradation non positif
    """
    interior_elements = interior_elements or RADIAL_CONFIG["interior_elements"]
    layer_elements = layer_elements or RADIAL_CONFIG["layer_elements"]
    grading = RADIAL_CONFIG["grading"] if grading is None else grading
    layer_grading = RADIAL_CONFIG["layer_grading"] if layer_grading is None else layer_grading

    if not grading > 0.0 or not layer_grading > 0.0:
        raise ConfigError(f"Rapport de gradation invalide: {grading}, {layer_grading}")
    if interior_elements < 2:
        raise ConfigError(f"Trop peu d'éléments intérieurs: {interior_elements}")

    interior = R * (1.0 - _graded(interior_elements, grading)[::-1])
    interior[0], interior[-1] = 0.0, R

    if eps == 0.0:
        return RadialGrid(interior, interior_elements, R, 0.0, grading)

    if layer_elements < RADIAL_CONFIG["min_layer_elements"]:
        raise ConfigError(
            f"La couche doit contenir au moins {RADIAL_CONFIG['min_layer_elements']} éléments "
            f"(reçu {layer_elements})"
        )
    layer = R + eps * _graded(layer_elements, layer_grading)
    layer[-1] = R + eps
    nodes = np.concatenate([interior, layer[1:]])
    return RadialGrid(nodes, interior_elements, R, eps, grading)


def refine_grid(grid: RadialGrid, factor: int = 2) -> RadialGrid:
    """Même grille avec `factor` fois plus d'éléments de chaque côté"""
    return build_radial_grid(
        grid.R, grid.eps,
        grid.interior_elements * factor,
        max(grid.layer_elements * factor, RADIAL_CONFIG["min_layer_elements"]),
        grid.grading
    )


def assemble_radial(
    problem: RadialProblem,
    grid: RadialGrid,
    uniform_coefficient: bool = False
) -> Tuple[sp.csr_matrix, sp.csr_matrix]:
    """
    Matrices de raideur et de masse 1D pondérées par |S^{n−1}| r^{n−1}
    (intégrales élémentaires exactes), sans condition aux limites.
    """
    r = grid.nodes
    a, b = r[:-1], r[1:]
    h = b - a
    weight_power = problem.n - 1

    q = np.ones_like(h)
    if not uniform_coefficient:
        q[grid.interface_index:] = problem.sigma

    # ∫_a^b r^{n−1} dr
    moment = (b ** problem.n - a ** problem.n) / problem.n
    k_local = q * moment / h ** 2

    # Masse P1 pondérée par quadrature de Gauss (exacte au degré 2 + n − 1)
    xi = 0.5 * (_GAUSS_POINTS + 1.0)
    radii = a[:, None] + h[:, None] * xi[None, :]
    wts = 0.5 * _GAUSS_WEIGHTS[None, :] * h[:, None] * radii ** weight_power
    phi_left, phi_right = 1.0 - xi, xi
    m_ll = wts @ (phi_left * phi_left)
    m_lr = wts @ (phi_left * phi_right)
    m_rr = wts @ (phi_right * phi_right)

    n_nodes = len(r)
    idx = np.arange(len(h))
    rows = np.concatenate([idx, idx, idx + 1, idx + 1])
    cols = np.concatenate([idx, idx + 1, idx, idx + 1])

    scale = problem.sphere_measure
    stiffness = sp.coo_matrix(
        (scale * np.concatenate([k_local, -k_local, -k_local, k_local]), (rows, cols)),
        shape=(n_nodes, n_nodes)
    ).tocsr()
    mass = sp.coo_matrix(
        (scale * np.concatenate([m_ll, m_lr, m_lr, m_rr]), (rows, cols)),
        shape=(n_nodes, n_nodes)
    ).tocsr()
    return stiffness, mass


def solve_two_phase_radial(
    problem: RadialProblem,
    grid: RadialGrid,
    uniform_coefficient: bool = False,
    tol: Optional[float] = None,
    seed: Optional[int] = None
) -> RadialSolution:
    """
    Plus petite valeur propre de
    ∫ Q Φ′u′ r^{n−1} dr = λ ∫ Φ u r^{n−1} dr, Φ(R + ε) = 0.

    Args:
        uniform_coefficient: Q ≡ 1 sur tout (0, R + ε) (contrôle Dirichlet)

    Raises:
        ConfigError: couche vide alors que le problème bi-phasique est demandé
        NumericalError: échec du solveur
    """
    if not uniform_coefficient and (problem.eps <= 0.0 or grid.layer_elements == 0):
        raise ConfigError("Problème bi-phasique sans couche (ε = 0)")
    if abs(grid.nodes[-1] - (problem.R + problem.eps)) > 1e-14 * problem.R or grid.R != problem.R:
        raise ConfigError("Grille incompatible avec le problème radial")

    stiffness, mass = assemble_radial(problem, grid, uniform_coefficient)

    # Élimination de la condition de Dirichlet au dernier nœud
    free = slice(0, len(grid.nodes) - 1)
    pair = smallest_eigenpair(stiffness[free, free], mass[free, free], tol=tol, seed=seed)

    phi = np.append(pair.vector, 0.0)
    logger.debug(
        f"Radial n={problem.n} ε={problem.eps}: λ₁ = {pair.value:.12g} "
        f"({len(grid.nodes) - 1} éléments)"
    )
    return RadialSolution(problem, grid, pair.value, phi, pair, uniform_coefficient)


def richardson_lambda(
    problem: RadialProblem,
    levels: int = 2,
    interior_elements: Optional[int] = None,
    layer_elements: Optional[int] = None,
    tol: Optional[float] = None,
    seed: Optional[int] = None,
    grading: Optional[float] = None
) -> Tuple[float, List[float], RadialSolution]:
    """
    λ₁(ε) extrapolé en h (erreur P1 en O(h²)) à partir de grilles doublées.

    Returns:
        (λ extrapolé, valeurs par niveau, solution du niveau le plus fin)
    """
    grid = build_radial_grid(problem.R, problem.eps, interior_elements, layer_elements, grading)
    values, solution = [], None
    for level in range(levels):
        if level > 0:
            grid = refine_grid(grid)
        solution = solve_two_phase_radial(problem, grid, tol=tol, seed=seed)
        values.append(solution.value)

    extrapolated = richardson_extrapolate(values) if levels > 1 else values[-1]
    return extrapolated, values, solution


def interface_flux_jump(solution: RadialSolution) -> float:
    """
    σ_ε·Φ′(R⁺) − Φ′(R⁻) à partir des pentes P1 de part et d'autre de
    l'interface (continuité du flux, tend vers 0 au raffinement).
    """
    r, phi = solution.grid.nodes, solution.phi
    i = solution.grid.interface_index
    inner = (phi[i] - phi[i - 1]) / (r[i] - r[i - 1])
    outer = (phi[i + 1] - phi[i]) / (r[i + 1] - r[i])
    return float(solution.problem.sigma * outer - inner)
