# -*- coding: utf-8 -*-
"""
Quantités de contrôle sur un couple propre bi-phasique 2D : énergies de
couche (tangentielle / normale), masse de couche, résidu de Robin sur Γ
par relèvement variationnel de ∂_νΦ, coefficients de Fourier c_k.
"""
from typing import Tuple
import logging

import numpy as np
from scipy.sparse.linalg import splu

from core.exceptions import ConfigError, MeshError
from modules.assembly import assemble_mass, assemble_stiffness, boundary_mass
from modules.eigensolver import EigenPair
from modules.geometry import BoundaryCurve, LayerChart
from modules.mesh import LAYER, Mesh2D, interior_submesh

logger = logging.getLogger(__name__)


def nodal_field(pair: EigenPair, mesh: Mesh2D) -> np.ndarray:
    """Vecteur nodal complet : les nœuds de ∂Ω_ε éliminés reçoivent 0"""
    vector = np.asarray(pair.vector, dtype=float)
    if len(vector) == mesh.n_nodes:
        return vector

    free = np.ones(mesh.n_nodes, dtype=bool)
    free[mesh.outer_nodes] = False
    if free.sum() != len(vector):
        raise ConfigError(f"Vecteur de taille {len(vector)} incompatible avec le maillage ({mesh.n_nodes} nœuds)")
    field = np.zeros(mesh.n_nodes)
    field[free] = vector
    return field


def element_gradients(field: np.ndarray, mesh: Mesh2D) -> np.ndarray:
    """Gradient constant du champ P1 sur chaque triangle, forme (M, 2)"""
    vertices = mesh.nodes[mesh.triangles]
    edges = np.roll(vertices, -2, axis=1) - np.roll(vertices, -1, axis=1)
    areas = mesh.areas()
    # ∇φ_i = rot(e_i)/(2|T|), e_i arête opposée au sommet i
    basis = np.stack([-edges[..., 1], edges[..., 0]], axis=-1) / (2.0 * areas)[:, None, None]
    return np.einsum("mi,mik->mk", field[mesh.triangles], basis)


def _layer_chords(mesh: Mesh2D, layer: np.ndarray) -> np.ndarray:
    """
    Tangente unitaire de chaque triangle de couche : direction de son arête à
    τ constant (les deux sommets de même niveau de couche).
    """
    triangles = mesh.triangles[layer]
    tau = mesh.node_tau[triangles]
    pairs = np.array([[0, 1], [1, 2], [2, 0]])
    gaps = np.abs(tau[:, pairs[:, 0]] - tau[:, pairs[:, 1]])
    chosen = pairs[np.argmin(gaps, axis=1)]
    rows = np.arange(len(layer))
    chords = mesh.nodes[triangles[rows, chosen[:, 1]]] - mesh.nodes[triangles[rows, chosen[:, 0]]]
    return chords / np.linalg.norm(chords, axis=1, keepdims=True)


def layer_energy_split(pair: EigenPair, mesh: Mesh2D, chart: LayerChart, alpha: float) -> Tuple[float, float]:
    """
    (tangentielle, normale) de σ_ε∫_Σ|∇Φ|² : sur chaque élément de couche, le
    gradient est projeté sur l'arête à τ constant et sur sa perpendiculaire.
    Un champ fonction de τ seul a une part tangentielle nulle à l'arrondi près.

    Raises:
        MeshError: élément de couche sans coordonnées de carte
    """
    field = nodal_field(pair, mesh)
    layer = np.flatnonzero(mesh.tags == LAYER)
    if len(layer) == 0:
        return 0.0, 0.0

    if np.any(~np.isfinite(mesh.node_tau[mesh.triangles[layer]])):
        raise MeshError("Élément de couche sans coordonnée de carte τ")
    tangents = _layer_chords(mesh, layer)
    normals = np.stack([tangents[:, 1], -tangents[:, 0]], axis=-1)

    gradients = element_gradients(field, mesh)[layer]
    areas = mesh.areas()[layer]
    sigma = alpha * chart.eps

    tangential = sigma * float(np.sum(np.einsum("mk,mk->m", gradients, tangents) ** 2 * areas))
    normal = sigma * float(np.sum(np.einsum("mk,mk->m", gradients, normals) ** 2 * areas))
    return tangential, normal


def tangential_energy(pair: EigenPair, mesh: Mesh2D, chart: LayerChart, alpha: float) -> float:
    """σ_ε∫_{Σ_ε}|∇_tan Φ|²"""
    return layer_energy_split(pair, mesh, chart, alpha)[0]


def normal_energy(pair: EigenPair, mesh: Mesh2D, chart: LayerChart, alpha: float) -> float:
    """σ_ε∫_{Σ_ε}|∂Φ/∂τ|²"""
    return layer_energy_split(pair, mesh, chart, alpha)[1]


def layer_energy(pair: EigenPair, mesh: Mesh2D, alpha: float, eps: float) -> float:
    """σ_ε∫_{Σ_ε}|∇Φ|² (forme quadratique de raideur restreinte à la couche)"""
    field = nodal_field(pair, mesh)
    coefficients = np.where(mesh.tags == LAYER, alpha * eps, 0.0)
    return float(field @ (assemble_stiffness(mesh, coefficients) @ field))


def total_energy(pair: EigenPair, mesh: Mesh2D, alpha: float, eps: float) -> float:
    """∫_Ω|∇Φ|² + σ_ε∫_Σ|∇Φ|², égal à λ₁ pour un vecteur B-normalisé"""
    field = nodal_field(pair, mesh)
    coefficients = np.where(mesh.tags == LAYER, alpha * eps, 1.0)
    return float(field @ (assemble_stiffness(mesh, coefficients) @ field))


def layer_mass(pair: EigenPair, mesh: Mesh2D) -> float:
    """∫_{Σ_ε}|Φ|², masse P1 exacte des éléments de couche"""
    field = nodal_field(pair, mesh)
    return float(field @ (assemble_mass(mesh, mesh.tags == LAYER) @ field))


def _interior_operators(mesh: Mesh2D):
    interior = interior_submesh(mesh) if mesh.has_layer else mesh
    return interior, assemble_stiffness(interior), assemble_mass(interior)


def robin_residual(pair: EigenPair, mesh: Mesh2D, curve: BoundaryCurve, alpha: float, eigenvalue: float = None) -> float:
    """
    ‖Φ + (1/α)∂_νΦ‖²_{L²(Γ)}.

    La dérivée normale g est relevée variationnellement : ∮ g ζ √G₀ =
    ∫_Ω ∇Φ·∇ζ − λ∫_Ω Φζ pour toute fonction chapeau ζ de l'interface.

    Raises:
        ConfigError: α ≤ 0
        MeshError: masse de bord singulière
    """
    if not alpha > 0.0:
        raise ConfigError(f"Résidu de Robin indéfini pour α = {alpha}")
    eigenvalue = pair.value if eigenvalue is None else eigenvalue

    field = nodal_field(pair, mesh)
    interior, stiffness, mass = _interior_operators(mesh)
    phi = field[:interior.n_nodes]
    load = stiffness @ phi - eigenvalue * (mass @ phi)

    ids = interior.interface_nodes
    gram = boundary_mass(interior, curve)[ids][:, ids].tocsc()
    try:
        recovered = splu(gram).solve(load[ids])
    except RuntimeError as e:
        raise MeshError(f"Masse de bord singulière: {e}")

    defect = phi[ids] + recovered / alpha
    return float(defect @ (gram @ defect))


def fourier_coefficient(pair: EigenPair, w: np.ndarray, mesh: Mesh2D) -> float:
    """
    c = ∫_Ω Φ w (produit scalaire de masse sur Ω), w nodal sur le maillage de Ω.

    Raises:
        ConfigError: w ne correspond pas aux nœuds de Ω
    """
    w = np.asarray(w, dtype=float)
    if len(w) != mesh.n_interior_nodes:
        raise ConfigError(f"Champ de taille {len(w)} incompatible avec Ω ({mesh.n_interior_nodes} nœuds)")
    field = nodal_field(pair, mesh)
    _, _, mass = _interior_operators(mesh)
    return float(field[:mesh.n_interior_nodes] @ (mass @ w))


def fourier_c1(pair: EigenPair, robin, mesh: Mesh2D) -> float:
    """c₁(ε) = ∫_Ω Φ_ε w₁"""
    if robin.mesh.n_interior_nodes != mesh.n_interior_nodes:
        raise ConfigError("Solution de Robin calculée sur un autre maillage de Ω")
    return fourier_coefficient(pair, robin.w, mesh)
