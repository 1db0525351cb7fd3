# -*- coding: utf-8 -*-
"""
Coordonnées tubulaires (t, τ) de la couche Σ_ε = {p(t) + τν(t), 0 < τ < ε}
"""
from dataclasses import dataclass
import logging

import numpy as np

from core.exceptions import ConfigError, DomainError, GeometryError
from .curves import BoundaryCurve, TWO_PI, curvature, mean_curvature, surface_measure

logger = logging.getLogger(__name__)

# Tolérance sur les bornes de τ (arrondi des coordonnées de maillage)
DEPTH_TOL = 1e-14


@dataclass(frozen=True)
class LayerChart:
    """Carte (t, τ) ↦ p(t) + τν_Γ(t) de la couche d'épaisseur ε"""
    curve: BoundaryCurve
    eps: float

    def __post_init__(self):
        if not self.eps > 0:
            raise ConfigError(f"Épaisseur de couche invalide: {self.eps}")

        # Injectivité : 1 − Hτ = 1 + κτ > 0 sur [0, ε]
        t = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        kappa_min = float(np.min(curvature(self.curve, t)))
        if 1.0 + kappa_min * self.eps <= 0.0:
            raise GeometryError(
                f"Couche trop épaisse: ε = {self.eps} >= 1/{-kappa_min:.4g} "
                f"(partie concave de {self.curve.name})"
            )


def _check_depth(chart: LayerChart, tau, allow_negative: bool = False):
    tau = np.asarray(tau, dtype=float)
    lower = -chart.eps if allow_negative else 0.0
    if np.any(tau < lower - DEPTH_TOL) or np.any(tau > chart.eps + DEPTH_TOL):
        raise DomainError(f"Profondeur hors de [0, ε={chart.eps}]: {tau}")
    return tau


def layer_jacobian(chart: LayerChart, t, tau):
    """
    Élément de volume √G_τ = √G₀(t)(1 − H(t)τ), exact pour une courbe plane.

    Raises:
        DomainError: τ hors de [0, ε]
        GeometryError: 1 − Hτ ≤ 0
    """
    tau = _check_depth(chart, tau)
    factor = 1.0 - mean_curvature(chart.curve, t) * tau
    if np.any(factor <= 0.0):
        raise GeometryError(f"Jacobien de couche non positif (ε = {chart.eps})")
    return surface_measure(chart.curve, t) * factor


def offset_point(chart: LayerChart, t, tau, allow_negative: bool = False) -> np.ndarray:
    """
    Point p(t) + τν_Γ(t) de la couche.

    allow_negative autorise τ ∈ [−ε, 0) (test de symétrie uniquement).
    """
    tau = _check_depth(chart, tau, allow_negative)
    t = np.asarray(t, dtype=float)
    return chart.curve.position(t) + tau[..., None] * chart.curve.normal(t)
