# -*- coding: utf-8 -*-
"""
Outils de convergence : extrapolation de Richardson en h et ajustement de la
pente en ε du modèle μ₁ − λ₁(ε) = s₀ε + Dε².
"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple
import logging

import numpy as np

from core.exceptions import FitError

logger = logging.getLogger(__name__)


def richardson_extrapolate(values: Sequence[float], ratio: float = 2.0, order: int = 2) -> float:
    """
    Tableau de Richardson pour des approximations v_l = v + c h_l^p + c′ h_l^{2p} + …
    obtenues avec h_{l+1} = h_l / ratio. Chaque colonne élimine un ordre de plus.
    """
    table = [float(v) for v in values]
    if not table:
        raise FitError("Aucune valeur à extrapoler")

    power = order
    while len(table) > 1:
        factor = ratio ** power
        table = [(factor * fine - coarse) / (factor - 1.0) for coarse, fine in zip(table[:-1], table[1:])]
        power += order
    return table[0]


@dataclass
class SlopeFit:
    """Coefficients du modèle Δ(ε) = s₀ε + Dε² et estimations ponctuelles s(ε) = Δ/ε"""
    slope: float
    next_order: float
    linear_slope: float
    pointwise: List[Tuple[float, float]] = field(default_factory=list)


def _validate_rows(eps: Sequence[float], deltas: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    eps = np.asarray(eps, dtype=float)
    deltas = np.asarray(deltas, dtype=float)
    if eps.shape != deltas.shape:
        raise FitError(f"Dimensions incohérentes: {eps.shape} vs {deltas.shape}")
    if len(eps) < 3:
        raise FitError(f"Au moins 3 points requis pour l'ajustement (reçu {len(eps)})")
    if len(np.unique(eps)) != len(eps):
        raise FitError(f"Valeurs de ε non distinctes: {eps.tolist()}")
    if not (np.all(np.isfinite(eps)) and np.all(np.isfinite(deltas))):
        raise FitError("Valeurs non finies dans les données d'ajustement")
    return eps, deltas


def fit_linear(eps: Sequence[float], deltas: Sequence[float]) -> float:
    """Pente du modèle purement linéaire Δ = s₀ε (moindres carrés)"""
    eps = np.asarray(eps, dtype=float)
    deltas = np.asarray(deltas, dtype=float)
    denominator = float(eps @ eps)
    if denominator == 0.0:
        raise FitError("Système dégénéré (ε nuls)")
    return float(eps @ deltas) / denominator


def fit_slope(eps: Sequence[float], deltas: Sequence[float]) -> SlopeFit:
    """
    Moindres carrés de Δ = s₀ε + Dε².

    Args:
        eps: épaisseurs distinctes (au moins 3)
        deltas: μ₁ − λ₁(ε)

    Raises:
        FitError: matrice de rang déficient ou données invalides
    """
    eps, deltas = _validate_rows(eps, deltas)

    design = np.column_stack([eps, eps ** 2])
    coeffs, _, rank, _ = np.linalg.lstsq(design, deltas, rcond=None)
    if rank < 2:
        raise FitError(f"Matrice d'ajustement de rang {rank} < 2")

    slope, next_order = float(coeffs[0]), float(coeffs[1])
    pointwise = [(float(e), float(d / e)) for e, d in zip(eps, deltas)]
    logger.debug(f"Ajustement: s₀ = {slope:.10g}, D = {next_order:.6g}")
    return SlopeFit(slope, next_order, fit_linear(eps, deltas), pointwise)
