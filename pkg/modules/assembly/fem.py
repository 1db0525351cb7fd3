# -*- coding: utf-8 -*-
"""
Assemblage P1 exact des formes bilinéaires :
  - problème bi-phasique sur Ω_ε (coefficient 1 dans Ω, σ_ε = αε dans Σ_ε),
    Dirichlet sur ∂Ω_ε par élimination symétrique ;
  - problème de Robin sur Ω (raideur + α·masse de bord sur Γ).
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union
import logging

import numpy as np
import pandas as pd
import scipy.sparse as sp

from core.exceptions import AssemblyError, ConfigError, MeshError
from modules.geometry import BoundaryCurve, TWO_PI, arc_length
from modules.mesh import LAYER, Mesh2D

logger = logging.getLogger(__name__)

# Tolérance relative de la vérification Σ B_ij = aire du maillage
AREA_TOL = 1e-10

_MASS_PATTERN = (np.ones((3, 3)) + np.eye(3)) / 12.0
_EDGE_PATTERN = np.array([[2.0, 1.0], [1.0, 2.0]]) / 6.0


@dataclass
class SparseSymmetric:
    """
    Matrice creuse symétrique (CSR).

    free_dofs[k] est l'indice global du nœud associé à la ligne k ;
    constrained indique que des lignes Dirichlet ont été éliminées.
    """
    matrix: sp.csr_matrix
    constrained: bool
    free_dofs: np.ndarray
    n_full: int

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def expand(self, x: np.ndarray) -> np.ndarray:
        """Vecteur réduit → vecteur nodal complet (zéro sur les nœuds contraints)"""
        full = np.zeros(self.n_full)
        full[self.free_dofs] = x
        return full

    def restrict(self, full: np.ndarray) -> np.ndarray:
        return np.asarray(full)[self.free_dofs]


def element_stiffness(vertices: np.ndarray, coefficient: float = 1.0) -> np.ndarray:
    """Raideur élémentaire P1 : K_ij = Q (e_i·e_j)/(4|T|), e_i arête opposée au sommet i"""
    vertices = np.asarray(vertices, dtype=float)
    edges = np.roll(vertices, -2, axis=0) - np.roll(vertices, -1, axis=0)
    area = 0.5 * abs(edges[1, 0] * edges[2, 1] - edges[1, 1] * edges[2, 0])
    return coefficient * (edges @ edges.T) / (4.0 * area)


def element_mass(vertices: np.ndarray) -> np.ndarray:
    """Masse élémentaire P1 exacte |T|/12·(1 + δ_ij)"""
    vertices = np.asarray(vertices, dtype=float)
    d1, d2 = vertices[1] - vertices[0], vertices[2] - vertices[0]
    area = 0.5 * abs(d1[0] * d2[1] - d1[1] * d2[0])
    return area * _MASS_PATTERN


def edge_mass(length: float) -> np.ndarray:
    """Masse d'arête P1 : L/6·[[2, 1], [1, 2]]"""
    return length * _EDGE_PATTERN


def _triangle_geometry(mesh: Mesh2D) -> Tuple[np.ndarray, np.ndarray]:
    """Arêtes opposées (M, 3, 2) et aires (M,) de tous les triangles"""
    vertices = mesh.nodes[mesh.triangles]
    edges = np.roll(vertices, -2, axis=1) - np.roll(vertices, -1, axis=1)
    return edges, mesh.areas()


def _scatter(mesh: Mesh2D, local: np.ndarray) -> sp.csr_matrix:
    """Assemble des blocs élémentaires (M, 3, 3) en une matrice globale"""
    rows = np.repeat(mesh.triangles, 3, axis=1).ravel()
    cols = np.tile(mesh.triangles, (1, 3)).ravel()
    n = mesh.n_nodes
    matrix = sp.coo_matrix((local.ravel(), (rows, cols)), shape=(n, n)).tocsr()
    # L'ordre de sommation des doublons dépend du tri des indices : symétrie entrée par entrée
    return ((matrix + matrix.T) * 0.5).tocsr()


def assemble_stiffness(mesh: Mesh2D, coefficients: Optional[np.ndarray] = None) -> sp.csr_matrix:
    """Σ_T Q_T ∫_T ∇φ_i·∇φ_j, Q constant par élément (1 par défaut)"""
    edges, areas = _triangle_geometry(mesh)
    local = np.einsum("mik,mjk->mij", edges, edges) / (4.0 * areas)[:, None, None]
    if coefficients is not None:
        local = local * np.asarray(coefficients, dtype=float)[:, None, None]
    return _scatter(mesh, local)


def assemble_mass(mesh: Mesh2D, element_mask: Optional[np.ndarray] = None) -> sp.csr_matrix:
    """∫ φ_i φ_j, restreint aux éléments de `element_mask` si fourni"""
    areas = mesh.areas()
    if element_mask is not None:
        areas = np.where(element_mask, areas, 0.0)
    local = areas[:, None, None] * _MASS_PATTERN[None, :, :]
    return _scatter(mesh, local)


def layer_coefficients(mesh: Mesh2D, alpha: float, eps: float) -> np.ndarray:
    """Q_T = 1 dans Ω, σ_ε = αε dans Σ_ε"""
    return np.where(mesh.tags == LAYER, alpha * eps, 1.0)


def _reduce(matrix: sp.csr_matrix, free: np.ndarray) -> sp.csr_matrix:
    return matrix[free][:, free].tocsr()


def assemble_two_phase(mesh: Mesh2D, alpha: float, eps: float) -> Tuple[SparseSymmetric, SparseSymmetric]:
    """
    Faisceau (A, B) du problème bi-phasique sur Ω_ε, Dirichlet éliminé.

    La condition de transmission est imposée faiblement par la conformité
    du maillage aux nœuds d'interface.

    Raises:
        ConfigError: σ_ε ≤ 0 ou maillage sans couche / d'épaisseur différente
        AssemblyError: Σ B_ij différent de l'aire du maillage
    """
    sigma = alpha * eps
    if not sigma > 0.0:
        raise ConfigError(f"σ_ε = αε doit être > 0 (α = {alpha}, ε = {eps})")
    if not mesh.has_layer or abs(mesh.eps - eps) > 1e-12 * max(1.0, eps):
        raise ConfigError(f"Maillage incompatible avec ε = {eps} (ε du maillage: {mesh.eps})")

    stiffness = assemble_stiffness(mesh, layer_coefficients(mesh, alpha, eps))
    mass = assemble_mass(mesh)

    total = float(mass.sum())
    area = mesh.area()
    if abs(total - area) > AREA_TOL * area:
        raise AssemblyError(f"Σ B_ij = {total:.15g} différent de l'aire {area:.15g}")

    constrained = np.zeros(mesh.n_nodes, dtype=bool)
    constrained[mesh.outer_nodes] = True
    free = np.flatnonzero(~constrained)

    logger.debug(f"Assemblage bi-phasique: {len(free)} inconnues, σ_ε = {sigma:.3g}")
    return (
        SparseSymmetric(_reduce(stiffness, free), True, free, mesh.n_nodes),
        SparseSymmetric(_reduce(mass, free), True, free, mesh.n_nodes)
    )


def interface_edge_lengths(mesh: Mesh2D, curve: BoundaryCurve) -> np.ndarray:
    """
    Longueur d'arc exacte de chaque segment de Γ entre nœuds d'interface consécutifs.

    Raises:
        MeshError: pas de nœuds d'interface ou segment de longueur nulle
    """
    ids = mesh.interface_nodes
    if len(ids) < 3:
        raise MeshError("Ensemble de nœuds d'interface vide ou dégénéré")
    t = mesh.node_t[ids]
    if np.any(np.isnan(t)):
        raise MeshError("Nœud d'interface sans coordonnée de carte t")

    t_next = np.append(t[1:], t[0] + TWO_PI)
    lengths = np.array([arc_length(curve, a, b) for a, b in zip(t, t_next)])
    if np.any(lengths <= 0.0):
        bad = int(np.argmin(lengths))
        raise MeshError(f"Arête de bord de longueur nulle entre les nœuds {ids[bad]} et {ids[(bad + 1) % len(ids)]}")
    return lengths


def boundary_mass(mesh: Mesh2D, curve: BoundaryCurve) -> sp.csr_matrix:
    """Masse de bord ∮_Γ φ_i φ_j √G₀ assemblée arête par arête (dimension n_nodes)"""
    ids = mesh.interface_nodes
    lengths = interface_edge_lengths(mesh, curve)
    first, second = ids, np.roll(ids, -1)

    rows = np.concatenate([first, first, second, second])
    cols = np.concatenate([first, second, first, second])
    values = np.concatenate([
        lengths * _EDGE_PATTERN[0, 0], lengths * _EDGE_PATTERN[0, 1],
        lengths * _EDGE_PATTERN[1, 0], lengths * _EDGE_PATTERN[1, 1]
    ])
    n = mesh.n_nodes
    return sp.coo_matrix((values, (rows, cols)), shape=(n, n)).tocsr()


def assemble_robin(mesh_interior: Mesh2D, curve: BoundaryCurve, alpha: float) -> Tuple[SparseSymmetric, SparseSymmetric]:
    """
    Faisceau de Robin sur Ω : A = raideur + α·masse de bord, B = masse.
    Aucune contrainte essentielle.

    Raises:
        MeshError: arête de bord de longueur nulle
    """
    if mesh_interior.has_layer:
        raise ConfigError("Le problème de Robin se résout sur le maillage de Ω seul")

    stiffness = assemble_stiffness(mesh_interior)
    if alpha != 0.0:
        stiffness = (stiffness + alpha * boundary_mass(mesh_interior, curve)).tocsr()
    mass = assemble_mass(mesh_interior)

    free = np.arange(mesh_interior.n_nodes)
    return (
        SparseSymmetric(stiffness, False, free, mesh_interior.n_nodes),
        SparseSymmetric(mass, False, free, mesh_interior.n_nodes)
    )


def export_matrix_coo(matrix, path: Union[str, Path]) -> Path:
    """Écrit le triangle supérieur au format texte « row col value »"""
    if isinstance(matrix, SparseSymmetric):
        matrix = matrix.matrix
    upper = sp.triu(sp.csr_matrix(matrix)).tocoo()

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    table = pd.DataFrame({"row": upper.row, "col": upper.col, "value": upper.data})
    table.sort_values(["row", "col"]).to_csv(path, sep=" ", index=False, float_format="%.17g")
    logger.info(f"Matrice exportée: {path} ({len(table)} entrées)")
    return path
