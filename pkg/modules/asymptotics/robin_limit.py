# -*- coding: utf-8 -*-
"""
Problème limite de Robin sur Ω : −Δw = μw, αw + ∂_ν w = 0 sur Γ
"""
from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from core.exceptions import ConfigError
from modules.assembly import SparseSymmetric, assemble_robin
from modules.eigensolver import EigenPair, smallest_eigenpair
from modules.geometry import BoundaryCurve
from modules.mesh import Mesh2D

logger = logging.getLogger(__name__)


@dataclass
class RobinSolution:
    """μ₁ et w₁ nodal sur le maillage de Ω (∫_Ω w₁² = 1, w₁ > 0)"""
    mu1: float
    w: np.ndarray
    alpha: float
    mesh: Mesh2D
    pair: Optional[EigenPair] = None

    @property
    def trace(self) -> np.ndarray:
        """Valeurs de w₁ aux nœuds d'interface, ordonnées par t croissant"""
        return self.w[self.mesh.interface_nodes]

    @property
    def trace_parameters(self) -> np.ndarray:
        return self.mesh.node_t[self.mesh.interface_nodes]

    def trace_at(self, t) -> np.ndarray:
        """Trace affine par morceaux en t (périodique)"""
        return np.interp(np.asarray(t, dtype=float), self.trace_parameters, self.trace, period=2.0 * np.pi)


def solve_robin(
    mesh_interior: Mesh2D,
    curve: BoundaryCurve,
    alpha: float,
    tol: Optional[float] = None,
    pencil: Optional[tuple] = None
) -> RobinSolution:
    """
    Couple propre principal du faisceau de Robin.

    Args:
        pencil: faisceau (A_rob, B) déjà assemblé, réutilisé tel quel

    Raises:
        ConfigError: α ≤ 0
        NumericalError: échec du solveur
    """
    if not alpha > 0.0:
        raise ConfigError(f"Le problème de Robin requiert α > 0 (reçu {alpha})")

    A, B = pencil if pencil is not None else assemble_robin(mesh_interior, curve, alpha)
    pair = smallest_eigenpair(A, B, tol=tol)

    w = B.expand(pair.vector) if isinstance(B, SparseSymmetric) else pair.vector
    if np.any(w <= 0.0):
        logger.warning(f"w₁ non strictement positif ({np.sum(w <= 0.0)} nœuds), α = {alpha}")

    logger.debug(f"Robin {curve.name}: μ₁ = {pair.value:.12g} ({mesh_interior.n_nodes} nœuds)")
    return RobinSolution(pair.value, w, alpha, mesh_interior, pair)
