# -*- coding: utf-8 -*-
"""
Constante de correction du premier ordre et prédiction λ₁(ε) ≈ μ₁ − εC*
"""
import logging

import numpy as np

from core.exceptions import DomainError
from modules.geometry import BoundaryCurve, TWO_PI, mean_curvature, surface_measure
from .robin_limit import RobinSolution

logger = logging.getLogger(__name__)


def correction_integrand(sol: RobinSolution, curve: BoundaryCurve, t, curvature_weight: float = 0.5) -> np.ndarray:
    """(c_H·α·H(t) + μ₁/3)·w₁(t)²·√G₀(t)"""
    t = np.asarray(t, dtype=float)
    weight = curvature_weight * sol.alpha * mean_curvature(curve, t) + sol.mu1 / 3.0
    return weight * sol.trace_at(t) ** 2 * surface_measure(curve, t)


def correction_integral(sol: RobinSolution, curve: BoundaryCurve, curvature_weight: float = 0.5) -> float:
    """
    C* = ∫_Γ (c_H·α·H + μ₁/3) w₁² √G₀ dt par trapèzes composites sur les
    nœuds d'interface, H et √G₀ exacts, w₁ affine par morceaux entre nœuds.
    """
    t = sol.trace_parameters
    values = correction_integrand(sol, curve, t, curvature_weight)
    spacing = np.diff(np.append(t, t[0] + TWO_PI))
    cstar = float(np.sum(0.5 * (values + np.roll(values, -1)) * spacing))
    logger.debug(f"C* ({curve.name}, c_H = {curvature_weight}) = {cstar:.10g}")
    return cstar


def predicted_lambda(mu1: float, cstar: float, eps):
    """
    μ₁ − εC*.

    Raises:
        DomainError: ε < 0
    """
    eps_arr = np.asarray(eps, dtype=float)
    if np.any(eps_arr < 0.0):
        raise DomainError(f"ε doit être positif ou nul: {eps}")
    predicted = mu1 - eps_arr * cstar
    return float(predicted) if predicted.ndim == 0 else predicted
