# -*- coding: utf-8 -*-
"""
Courbes fermées régulières du plan : paramétrisation, normale extérieure,
courbure signée et mesure d'arc.

Toutes les courbes sont paramétrées sur [0, 2π), orientées positivement
(sens trigonométrique). Les dérivées sont analytiques, y compris pour les
profils radiaux de Fourier.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence, Tuple
import logging

import numpy as np
from scipy import integrate

from core.exceptions import ConfigError, GeometryError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class BoundaryCurve:
    """
    Interface Γ donnée par p : [0, 2π) → ℝ² et ses deux premières dérivées.

    Les évaluateurs acceptent un scalaire ou un tableau de paramètres et
    renvoient un tableau de forme (..., 2).
    """
    name: str
    position: Evaluator
    first_derivative: Evaluator
    second_derivative: Evaluator
    params: Dict = field(default_factory=dict, compare=False)

    def __call__(self, t):
        return self.position(np.asarray(t, dtype=float))

    def tangent(self, t) -> np.ndarray:
        """Tangente unitaire p′/|p′|"""
        dp = self.first_derivative(np.asarray(t, dtype=float))
        return dp / np.linalg.norm(dp, axis=-1, keepdims=True)

    def normal(self, t) -> np.ndarray:
        """Normale unitaire extérieure ν_Γ (rotation horaire de la tangente)"""
        tan = self.tangent(t)
        return np.stack([tan[..., 1], -tan[..., 0]], axis=-1)

    def is_star_shaped(self, samples: int = 2048) -> bool:
        """Vrai si l'angle polaire de p(t) croît strictement (étoilé par rapport à l'origine)"""
        t = np.linspace(0.0, TWO_PI, samples, endpoint=False)
        p = self.position(t)
        dp = self.first_derivative(t)
        return bool(np.all(p[:, 0] * dp[:, 1] - p[:, 1] * dp[:, 0] > 0.0))


def circle(R: float = 1.0) -> BoundaryCurve:
    """Cercle de rayon R centré à l'origine"""
    if R <= 0:
        raise ConfigError(f"Rayon invalide: {R}")

    def position(t):
        return R * np.stack([np.cos(t), np.sin(t)], axis=-1)

    def first(t):
        return R * np.stack([-np.sin(t), np.cos(t)], axis=-1)

    def second(t):
        return -R * np.stack([np.cos(t), np.sin(t)], axis=-1)

    return BoundaryCurve("circle", position, first, second, {"R": float(R)})


def ellipse(a: float = 2.0, b: float = 1.0) -> BoundaryCurve:
    """Ellipse de demi-axes a (selon x) et b (selon y)"""
    if a <= 0 or b <= 0:
        raise ConfigError(f"Demi-axes invalides: a={a}, b={b}")

    def position(t):
        return np.stack([a * np.cos(t), b * np.sin(t)], axis=-1)

    def first(t):
        return np.stack([-a * np.sin(t), b * np.cos(t)], axis=-1)

    def second(t):
        return np.stack([-a * np.cos(t), -b * np.sin(t)], axis=-1)

    return BoundaryCurve("ellipse", position, first, second, {"a": float(a), "b": float(b)})


def fourier(rho0: float, cos_coeffs: Sequence[float] = (), sin_coeffs: Sequence[float] = ()) -> BoundaryCurve:
    """
    Courbe étoilée p(t) = ρ(t)(cos t, sin t) avec
    ρ(t) = ρ₀ + Σ_k a_k cos(kt) + b_k sin(kt), k ≥ 1.

    Raises:
        ConfigError: si ρ s'annule ou devient négatif
    """
    a = np.asarray(cos_coeffs, dtype=float)
    b = np.asarray(sin_coeffs, dtype=float)
    n_modes = max(len(a), len(b))
    a = np.pad(a, (0, n_modes - len(a)))
    b = np.pad(b, (0, n_modes - len(b)))
    k = np.arange(1, n_modes + 1, dtype=float)

    def radial(t, order):
        t = np.asarray(t, dtype=float)
        kt = np.multiply.outer(t, k)
        cos_kt, sin_kt = np.cos(kt), np.sin(kt)
        if order == 0:
            return rho0 + cos_kt @ a + sin_kt @ b
        if order == 1:
            return -sin_kt @ (k * a) + cos_kt @ (k * b)
        return -cos_kt @ (k ** 2 * a) - sin_kt @ (k ** 2 * b)

    def position(t):
        rho = radial(t, 0)
        return np.stack([rho * np.cos(t), rho * np.sin(t)], axis=-1)

    def first(t):
        rho, drho = radial(t, 0), radial(t, 1)
        return np.stack([
            drho * np.cos(t) - rho * np.sin(t),
            drho * np.sin(t) + rho * np.cos(t)
        ], axis=-1)

    def second(t):
        rho, drho, ddrho = radial(t, 0), radial(t, 1), radial(t, 2)
        return np.stack([
            (ddrho - rho) * np.cos(t) - 2.0 * drho * np.sin(t),
            (ddrho - rho) * np.sin(t) + 2.0 * drho * np.cos(t)
        ], axis=-1)

    samples = radial(np.linspace(0.0, TWO_PI, 4096, endpoint=False), 0)
    if np.min(samples) <= 0.0:
        raise ConfigError(f"Profil radial non positif (min ρ = {np.min(samples):.3g})")

    params = {"rho0": float(rho0), "cos_coeffs": a.tolist(), "sin_coeffs": b.tolist()}
    return BoundaryCurve("fourier", position, first, second, params)


def reparametrized(curve: BoundaryCurve, amplitude: float = 0.3, shift: float = 0.0) -> BoundaryCurve:
    """
    Même ensemble de points, autre paramétrisation : t ↦ p(s(t)) avec
    s(t) = t + amplitude·sin(t) + shift, |amplitude| < 1.
    """
    if abs(amplitude) >= 1.0:
        raise ConfigError(f"Amplitude de reparamétrisation invalide: {amplitude}")

    def s(t):
        return t + amplitude * np.sin(t) + shift

    def ds(t):
        return 1.0 + amplitude * np.cos(t)

    def dds(t):
        return -amplitude * np.sin(t)

    def position(t):
        return curve.position(s(t))

    def first(t):
        return curve.first_derivative(s(t)) * ds(t)[..., None]

    def second(t):
        return (curve.second_derivative(s(t)) * (ds(t) ** 2)[..., None]
                + curve.first_derivative(s(t)) * dds(t)[..., None])

    params = dict(curve.params, reparam_amplitude=amplitude, reparam_shift=shift)
    return BoundaryCurve(curve.name, position, first, second, params)


def curvature(curve: BoundaryCurve, t):
    """
    Courbure signée κ = (p′ × p″)/|p′|³.

    Convention : cercle parcouru dans le sens direct → κ = 1/R > 0.

    Raises:
        GeometryError: dérivées non finies ou courbe non régulière
    """
    t = np.asarray(t, dtype=float)
    dp = curve.first_derivative(t)
    ddp = curve.second_derivative(t)
    if not (np.all(np.isfinite(dp)) and np.all(np.isfinite(ddp))):
        raise GeometryError(f"Dérivées non finies pour la courbe {curve.name}")

    speed = np.linalg.norm(dp, axis=-1)
    if np.any(speed <= 0.0):
        raise GeometryError(f"Courbe {curve.name} non régulière (|p′| = 0)")

    cross = dp[..., 0] * ddp[..., 1] - dp[..., 1] * ddp[..., 0]
    return cross / speed ** 3


def mean_curvature(curve: BoundaryCurve, t):
    """
    Courbure moyenne H relative à la normale extérieure, au sens de l'élément
    de volume de la couche √G_τ = √G₀(1 − Hτ). Pour une courbe plane H = −κ.
    """
    return -curvature(curve, t)


def surface_measure(curve: BoundaryCurve, t):
    """Densité d'arc √G₀ = |p′(t)|"""
    dp = curve.first_derivative(np.asarray(t, dtype=float))
    return np.linalg.norm(dp, axis=-1)


def arc_length(curve: BoundaryCurve, t0: float, t1: float) -> float:
    """Longueur d'arc exacte entre deux paramètres (quadrature adaptative de |p′|)"""
    value, _ = integrate.quad(
        lambda s: float(surface_measure(curve, s)), t0, t1,
        epsabs=1e-13, epsrel=1e-12, limit=200
    )
    return value


def length(curve: BoundaryCurve) -> float:
    """Longueur totale de Γ"""
    return arc_length(curve, 0.0, TWO_PI)


def turning_number_integral(curve: BoundaryCurve) -> float:
    """∮ κ √G₀ dt, égal à 2π pour toute courbe simple fermée (Gauss–Bonnet)"""
    value, _ = integrate.quad(
        lambda s: float(curvature(curve, s) * surface_measure(curve, s)), 0.0, TWO_PI,
        epsabs=1e-13, epsrel=1e-12, limit=400
    )
    return value


def signed_area(curve: BoundaryCurve, samples: int = 4096) -> float:
    """Aire algébrique ½∮(x y′ − y x′) dt (trapèzes, spectral pour un intégrande périodique)"""
    t = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    p = curve.position(t)
    dp = curve.first_derivative(t)
    integrand = p[:, 0] * dp[:, 1] - p[:, 1] * dp[:, 0]
    return 0.5 * float(np.mean(integrand)) * TWO_PI


def curve_from_spec(spec: Dict) -> BoundaryCurve:
    """
    Construit une courbe depuis sa description de configuration :
    {kind: "circle", R} | {kind: "ellipse", a, b} | {kind: "fourier", rho0, cos_coeffs, sin_coeffs}
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError(f"Description de courbe invalide: {spec}")

    kind = spec["kind"]
    try:
        if kind == "circle":
            return circle(float(spec["R"]))
        if kind == "ellipse":
            return ellipse(float(spec["a"]), float(spec["b"]))
        if kind == "fourier":
            return fourier(
                float(spec["rho0"]),
                spec.get("cos_coeffs", []),
                spec.get("sin_coeffs", [])
            )
    except KeyError as e:
        raise ConfigError(f"Paramètre de courbe manquant pour '{kind}': {e}")

    raise ConfigError(f"Type de courbe inconnu: {kind}")


def curve_summary(curve: BoundaryCurve) -> Tuple[float, float, float]:
    """(longueur, aire, courbure maximale) pour les journaux"""
    t = np.linspace(0.0, TWO_PI, 1024, endpoint=False)
    return length(curve), signed_area(curve), float(np.max(curvature(curve, t)))
