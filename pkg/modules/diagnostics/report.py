# -*- coding: utf-8 -*-
"""
Rapport de diagnostics par ε et critères de bande sur un balayage
"""
from dataclasses import asdict, dataclass
from typing import Dict, Optional, Sequence
import logging

import numpy as np

from config.sweep import BAND_CONFIG
from core.exceptions import FitError
from modules.eigensolver import EigenPair
from modules.geometry import BoundaryCurve, LayerChart
from modules.mesh import Mesh2D
from .fields import (
    fourier_c1,
    fourier_coefficient,
    layer_energy,
    layer_energy_split,
    layer_mass,
    robin_residual,
    total_energy,
)

logger = logging.getLogger(__name__)


@dataclass
class DiagnosticsReport:
    """Quantités de contrôle d'un couple propre bi-phasique à ε fixé"""
    eps: float
    eigenvalue: float
    total_energy: float
    tangential_energy: float
    normal_energy: float
    layer_energy: float
    layer_mass: float
    robin_residual: float
    c1: float
    c2: Optional[float] = None
    h2_energy: Optional[float] = None

    @property
    def split_defect(self) -> float:
        """|tangentielle + normale − énergie de couche|"""
        return abs(self.tangential_energy + self.normal_energy - self.layer_energy)

    def to_row(self) -> Dict:
        return asdict(self)


def diagnose(
    pair: EigenPair,
    mesh: Mesh2D,
    robin,
    curve: BoundaryCurve,
    alpha: float,
    eps: float,
    second_eigenfunction: Optional[np.ndarray] = None
) -> DiagnosticsReport:
    """Calcule toutes les quantités de contrôle 2D pour un couple propre de Ω_ε"""
    chart = LayerChart(curve, eps)
    tangential, normal = layer_energy_split(pair, mesh, chart, alpha)

    c2 = None
    if second_eigenfunction is not None:
        c2 = fourier_coefficient(pair, second_eigenfunction, mesh)

    report = DiagnosticsReport(
        eps=eps,
        eigenvalue=pair.value,
        total_energy=total_energy(pair, mesh, alpha, eps),
        tangential_energy=tangential,
        normal_energy=normal,
        layer_energy=layer_energy(pair, mesh, alpha, eps),
        layer_mass=layer_mass(pair, mesh),
        robin_residual=robin_residual(pair, mesh, curve, alpha),
        c1=fourier_c1(pair, robin, mesh),
        c2=c2
    )
    logger.debug(
        f"Diagnostics ε = {eps}: E_tan = {report.tangential_energy:.3e}, "
        f"résidu Robin = {report.robin_residual:.3e}, c₁ = {report.c1:.10f}"
    )
    return report


def ratio_bounded(eps: Sequence[float], values: Sequence[float], power: float = 1.0, band: Optional[float] = None) -> bool:
    """
    Lecture « O(ε^p) » sur un balayage : max_ε value/ε^p reste sous
    band × (value/ε^p au plus grand ε).
    """
    band = BAND_CONFIG["scaling_band"] if band is None else band
    eps = np.asarray(eps, dtype=float)
    ratios = np.abs(np.asarray(values, dtype=float)) / eps ** power
    reference = ratios[np.argmax(eps)]
    return bool(np.max(ratios) <= band * reference)


def within_band(values: Sequence[float], band: Optional[float] = None) -> bool:
    """Bornitude : max/min ≤ band"""
    band = BAND_CONFIG["h2_band"] if band is None else band
    values = np.abs(np.asarray(values, dtype=float))
    return bool(np.max(values) <= band * np.min(values))


def is_decreasing(eps: Sequence[float], values: Sequence[float]) -> bool:
    """Vrai si values décroît strictement lorsque ε décroît"""
    order = np.argsort(eps)[::-1]
    ordered = np.asarray(values, dtype=float)[order]
    return bool(np.all(np.diff(ordered) < 0.0))


def layer_mass_controlled(report: DiagnosticsReport, margin: Optional[float] = None) -> bool:
    """∫_Σ|Φ|² ≤ margin·ε·σ_ε∫_Σ|∇Φ|²"""
    margin = BAND_CONFIG["layer_mass_margin"] if margin is None else margin
    return report.layer_mass <= margin * report.eps * report.layer_energy


def empirical_exponent(eps: Sequence[float], values: Sequence[float]) -> float:
    """
    Pente moindres carrés de log|value| en fonction de log ε (consignée, jamais imposée).

    Raises:
        FitError: moins de deux valeurs non nulles
    """
    eps = np.asarray(eps, dtype=float)
    values = np.abs(np.asarray(values, dtype=float))
    keep = (values > 0.0) & (eps > 0.0)
    if keep.sum() < 2:
        raise FitError("Exposant empirique: moins de deux valeurs non nulles")
    slope, _ = np.polyfit(np.log(eps[keep]), np.log(values[keep]), 1)
    return float(slope)


def tangential_checks(eps: Sequence[float], tangential: Sequence[float], layer: Sequence[float]) -> Dict[str, bool]:
    """
    Énergie tangentielle : bande O(ε) sur E_tan/ε, sauf si E_tan reste au
    niveau de l'arrondi devant l'énergie de couche à tous les ε (géométrie
    symétrique, valeur exacte nulle), auquel cas seul ce niveau est contrôlé.
    """
    tangential = np.abs(np.asarray(tangential, dtype=float))
    layer = np.abs(np.asarray(layer, dtype=float))
    if np.all(tangential <= BAND_CONFIG["tangential_negligible"] * layer):
        return {"tangential_energy_negligible": True}
    return {"tangential_energy_over_eps": ratio_bounded(eps, tangential)}


def band_checks(eps: Sequence[float], rows: Sequence[Dict]) -> Dict[str, bool]:
    """Critères de bande d'un balayage à partir des lignes de diagnostics"""
    column = {key: [row.get(key) for row in rows] for key in rows[0]} if rows else {}
    checks = {}
    if column.get("robin_residual") and None not in column["robin_residual"]:
        checks["robin_residual_over_eps"] = ratio_bounded(eps, column["robin_residual"])
    tangential = column.get("tan_energy")
    if tangential and None not in tangential:
        layer = column.get("layer_energy")
        if layer and None not in layer:
            checks.update(tangential_checks(eps, tangential, layer))
        elif any(tangential):
            checks["tangential_energy_over_eps"] = ratio_bounded(eps, tangential)
    if column.get("layer_mass") and None not in column["layer_mass"]:
        checks["layer_mass_over_eps"] = ratio_bounded(eps, column["layer_mass"])
    if column.get("c1") and None not in column["c1"]:
        checks["c1_converging"] = is_decreasing(eps, np.abs(np.asarray(column["c1"]) - 1.0))
    if column.get("h2_energy") and None not in column["h2_energy"]:
        checks["h2_bounded"] = within_band(column["h2_energy"])
    return checks
