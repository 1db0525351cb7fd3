# -*- coding: utf-8 -*-
"""
Triangulation conforme de Ω_ε = Ω ∪ Γ ∪ Σ_ε pour un domaine étoilé :
maillage intérieur radial-angulaire avec éventail central, anneau structuré
(t, τ) pour la couche Σ_ε, nœuds d'interface partagés.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
import logging

import numpy as np

from core.exceptions import ConfigError, GeometryError
from modules.geometry import BoundaryCurve, LayerChart, TWO_PI

logger = logging.getLogger(__name__)

INTERIOR = 0
LAYER = 1


@dataclass(frozen=True)
class Mesh2D:
    """
    Maillage triangulaire P1.

    Les nœuds de Ω (origine, anneaux intérieurs, interface) sont numérotés en
    premier : les `n_interior_nodes` premières lignes forment le maillage de Ω,
    ce qui permet de transférer un champ entre Ω et Ω_ε par indice.
    """
    nodes: np.ndarray
    triangles: np.ndarray
    tags: np.ndarray
    interface_nodes: np.ndarray
    outer_nodes: np.ndarray
    node_t: np.ndarray
    node_tau: np.ndarray
    n_interior_nodes: int
    curve: BoundaryCurve
    eps: float
    resolution: Dict = field(default_factory=dict, compare=False)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def has_layer(self) -> bool:
        return bool(np.any(self.tags == LAYER))

    def areas(self) -> np.ndarray:
        """Aires signées des triangles"""
        p0, p1, p2 = (self.nodes[self.triangles[:, k]] for k in range(3))
        return 0.5 * ((p1[:, 0] - p0[:, 0]) * (p2[:, 1] - p0[:, 1])
                      - (p1[:, 1] - p0[:, 1]) * (p2[:, 0] - p0[:, 0]))

    def area(self) -> float:
        return float(np.sum(self.areas()))

    def region_area(self, tag: int) -> float:
        return float(np.sum(self.areas()[self.tags == tag]))

    def edges(self) -> np.ndarray:
        """Arêtes uniques (paires triées)"""
        pairs = np.vstack([self.triangles[:, [0, 1]], self.triangles[:, [1, 2]], self.triangles[:, [2, 0]]])
        return np.unique(np.sort(pairs, axis=1), axis=0)

    def euler_characteristic(self) -> int:
        """V − E + F, la face extérieure comptée dans F"""
        return self.n_nodes - len(self.edges()) + len(self.triangles) + 1


def _ring_counts(n_boundary: int, interior_levels: int) -> List[int]:
    """Nombre de nœuds par anneau intérieur, proportionnel au rayon relatif"""
    return [max(3, int(round(n_boundary * j / interior_levels))) for j in range(1, interior_levels + 1)]


def _zip_rings(inner: np.ndarray, t_inner: np.ndarray, outer: np.ndarray, t_outer: np.ndarray) -> List[Tuple[int, int, int]]:
    """
    Triangule la bande entre deux anneaux fermés ordonnés par paramètre
    croissant en avançant sur l'anneau dont le prochain paramètre est le plus petit.
    """
    a, b = len(inner), len(outer)
    t_in = np.append(t_inner, TWO_PI)
    t_out = np.append(t_outer, TWO_PI)
    triangles = []
    i = o = 0
    while i < a or o < b:
        advance_outer = o < b and (i == a or t_out[o + 1] <= t_in[i + 1])
        if advance_outer:
            triangles.append((inner[i % a], outer[o % b], outer[(o + 1) % b]))
            o += 1
        else:
            triangles.append((inner[i % a], outer[o % b], inner[(i + 1) % a]))
            i += 1
    return triangles


def build_mesh(
    curve: BoundaryCurve,
    eps: float,
    n_boundary: int,
    n_layer: int,
    interior_levels: int
) -> Mesh2D:
    """
    Construit le maillage de Ω_ε.

    Args:
        curve: interface Γ, étoilée par rapport à l'origine
        eps: épaisseur de la couche (0 : maillage de Ω seul)
        n_boundary: nombre de nœuds sur Γ
        n_layer: nombre de tranches en τ dans la couche (≥ 4)
        interior_levels: nombre d'anneaux intérieurs (origine exclue)

    Raises:
        ConfigError: courbe non étoilée, résolution invalide
        GeometryError: couche trop épaisse ou élément inversé
    """
    if n_boundary < 3 or interior_levels < 1:
        raise ConfigError(f"Résolution invalide: n_boundary={n_boundary}, interior_levels={interior_levels}")
    if eps > 0.0 and n_layer < 4:
        raise ConfigError(f"n_layer doit être >= 4 (reçu {n_layer})")
    if not curve.is_star_shaped():
        raise ConfigError(f"Courbe {curve.name} non étoilée par rapport à l'origine")

    chart = LayerChart(curve, eps) if eps > 0.0 else None

    # Origine puis anneaux intérieurs x = s·p(t), le dernier anneau est Γ
    nodes = [np.zeros((1, 2))]
    node_t = [np.array([np.nan])]
    node_tau = [np.array([np.nan])]
    triangles: List[Tuple[int, int, int]] = []

    counts = _ring_counts(n_boundary, interior_levels)
    counts[-1] = n_boundary
    previous_ids, previous_t = None, None
    offset = 1
    for level, count in enumerate(counts, start=1):
        t = TWO_PI * np.arange(count) / count
        nodes.append(level / interior_levels * curve.position(t))
        ids = offset + np.arange(count)
        on_interface = level == interior_levels
        node_t.append(t if on_interface else np.full(count, np.nan))
        node_tau.append(np.zeros(count) if on_interface else np.full(count, np.nan))

        if previous_ids is None:
            triangles.extend((0, ids[k], ids[(k + 1) % count]) for k in range(count))
        else:
            triangles.extend(_zip_rings(previous_ids, previous_t, ids, t))
        previous_ids, previous_t = ids, t
        offset += count

    interface_nodes = previous_ids.copy()
    interface_t = previous_t
    n_interior_nodes = offset
    n_interior_triangles = len(triangles)

    # Couche structurée {p(tᵢ) + τⱼ ν(tᵢ)}
    outer_nodes = interface_nodes
    if chart is not None:
        normals = curve.normal(interface_t)
        base = curve.position(interface_t)
        layer_ids = [interface_nodes]
        for level in range(1, n_layer + 1):
            tau = eps * level / n_layer
            nodes.append(base + tau * normals)
            node_t.append(interface_t.copy())
            node_tau.append(np.full(n_boundary, tau))
            layer_ids.append(offset + np.arange(n_boundary))
            offset += n_boundary

        for level in range(n_layer):
            lower, upper = layer_ids[level], layer_ids[level + 1]
            for i in range(n_boundary):
                j = (i + 1) % n_boundary
                triangles.append((lower[i], upper[j], lower[j]))
                triangles.append((lower[i], upper[i], upper[j]))
        outer_nodes = layer_ids[-1]

    triangles = np.asarray(triangles, dtype=np.int64)
    tags = np.full(len(triangles), INTERIOR, dtype=np.int8)
    tags[n_interior_triangles:] = LAYER

    mesh = Mesh2D(
        nodes=np.vstack(nodes),
        triangles=triangles,
        tags=tags,
        interface_nodes=np.asarray(interface_nodes, dtype=np.int64),
        outer_nodes=np.asarray(outer_nodes, dtype=np.int64),
        node_t=np.concatenate(node_t),
        node_tau=np.concatenate(node_tau),
        n_interior_nodes=n_interior_nodes,
        curve=curve,
        eps=float(eps),
        resolution={"n_boundary": n_boundary, "n_layer": n_layer, "interior_levels": interior_levels}
    )

    areas = mesh.areas()
    if np.any(areas <= 0.0):
        bad = int(np.argmin(areas))
        region = "LAYER" if tags[bad] == LAYER else "INTERIOR"
        raise GeometryError(f"Élément inversé: triangle {bad} ({region}), aire {areas[bad]:.3e}")

    logger.debug(
        f"Maillage {curve.name}: {mesh.n_nodes} nœuds, {len(triangles)} triangles, "
        f"ε = {eps}, aire = {mesh.area():.6f}"
    )
    return mesh


def interior_submesh(mesh: Mesh2D) -> Mesh2D:
    """Restriction à Ω, même numérotation pour les nœuds intérieurs et d'interface"""
    keep = mesh.tags == INTERIOR
    n = mesh.n_interior_nodes
    return Mesh2D(
        nodes=mesh.nodes[:n],
        triangles=mesh.triangles[keep],
        tags=mesh.tags[keep],
        interface_nodes=mesh.interface_nodes,
        outer_nodes=mesh.interface_nodes,
        node_t=mesh.node_t[:n],
        node_tau=mesh.node_tau[:n],
        n_interior_nodes=n,
        curve=mesh.curve,
        eps=0.0,
        resolution=dict(mesh.resolution)
    )
