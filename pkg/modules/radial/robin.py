# -*- coding: utf-8 -*-
"""
Problème de Robin radial (disque n=2, boule n=3) : valeur propre principale
semi-analytique et constante de correction au premier ordre.
"""
from dataclasses import dataclass
from typing import Tuple
import logging

import numpy as np

from core.exceptions import ConfigError
from .bessel import bessel_j, bracketed_root, first_bessel_zero

logger = logging.getLogger(__name__)

SPHERE_MEASURE = {2: 2.0 * np.pi, 3: 4.0 * np.pi}


@dataclass(frozen=True)
class RadialProblem:
    """
    Données d'un problème radialement symétrique.

    Q_ε = 1 sur (0, R), σ_ε = αε sur (R, R + ε).
    """
    R: float = 1.0
    n: int = 2
    alpha: float = 1.0
    eps: float = 0.0

    def __post_init__(self):
        if self.n not in SPHERE_MEASURE:
            raise ConfigError(f"Dimension non supportée: {self.n}")
        if self.R <= 0:
            raise ConfigError(f"Rayon invalide: {self.R}")
        if self.alpha < 0:
            raise ConfigError(f"Paramètre α invalide: {self.alpha}")
        if not 0.0 <= self.eps < self.R:
            raise ConfigError(f"Épaisseur invalide: ε = {self.eps} (R = {self.R})")

    @property
    def sigma(self) -> float:
        """Conductivité de la couche σ_ε = αε"""
        return self.alpha * self.eps

    @property
    def sphere_measure(self) -> float:
        """Mesure de la sphère unité S^{n−1}"""
        return SPHERE_MEASURE[self.n]

    @property
    def interface_measure(self) -> float:
        """|Γ| = 2πR (n=2) ou 4πR² (n=3)"""
        return self.sphere_measure * self.R ** (self.n - 1)

    @property
    def mean_curvature(self) -> float:
        """H relatif à la normale extérieure au sens √G_τ = √G₀(1 − Hτ) : −(n−1)/R"""
        return -(self.n - 1) / self.R

    def with_eps(self, eps: float) -> "RadialProblem":
        return RadialProblem(self.R, self.n, self.alpha, eps)


@dataclass(frozen=True)
class RadialProfile:
    """Fonction propre de Robin w₁(r) = A·J₀(kr) (n=2) ou A·sin(kr)/(kr) (n=3)"""
    k: float
    amplitude: float
    n: int

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        if self.n == 2:
            return self.amplitude * bessel_j(0, self.k * r)
        return self.amplitude * np.sinc(self.k * r / np.pi)

    def derivative(self, r):
        r = np.asarray(r, dtype=float)
        if self.n == 2:
            return -self.amplitude * self.k * bessel_j(1, self.k * r)
        kr = self.k * r
        with np.errstate(divide="ignore", invalid="ignore"):
            value = self.amplitude * (kr * np.cos(kr) - np.sin(kr)) / (kr * r)
        return np.where(r > 0.0, value, 0.0)


def _disk_root(R: float, alpha: float) -> float:
    """k ∈ (0, j₀,₁/R) tel que k·J₁(kR) = α·J₀(kR)"""
    def f(k):
        return k * bessel_j(1, k * R) - alpha * bessel_j(0, k * R)

    def fprime(k):
        return k * R * bessel_j(0, k * R) + alpha * R * bessel_j(1, k * R)

    return bracketed_root(f, (0.0, first_bessel_zero(0) / R), fprime)


def _ball_root(R: float, alpha: float) -> float:
    """k ∈ (0, π/R) tel que k·cot(kR) = (1 − αR)/R, écrit sans singularité en 0"""
    c = (1.0 - alpha * R) / R

    def h(k):
        return np.cos(k * R) - c * R * np.sinc(k * R / np.pi)

    def hprime(k):
        kr = k * R
        return -R * np.sin(kr) - c * (kr * np.cos(kr) - np.sin(kr)) / k ** 2

    return bracketed_root(h, (0.0, np.pi / R), hprime)


def robin_residual_radial(problem: RadialProblem, k: float) -> float:
    """Résidu de l'équation caractéristique au k retourné"""
    R, alpha = problem.R, problem.alpha
    if problem.n == 2:
        return float(k * bessel_j(1, k * R) - alpha * bessel_j(0, k * R))
    return float(k * np.cos(k * R) - (1.0 - alpha * R) / R * np.sin(k * R))


def robin_mu1(problem: RadialProblem) -> Tuple[float, RadialProfile]:
    """
    Valeur propre principale μ₁ = k² du problème de Robin
    −Δw = μw dans la boule, αw + ∂w/∂ν = 0 sur Γ, et w₁ normalisée
    (∫_Ω w₁² dx = 1).

    Raises:
        NumericalError: échec d'encadrement de la racine
    """
    R, n, alpha = problem.R, problem.n, problem.alpha

    if alpha == 0.0:
        volume = problem.sphere_measure * R ** n / n
        return 0.0, RadialProfile(0.0, 1.0 / np.sqrt(volume), n)

    if n == 2:
        k = _disk_root(R, alpha)
        j0, j1 = bessel_j(0, k * R), bessel_j(1, k * R)
        # Identité de Lommel : ∫₀^R J₀(kr)² r dr = R²(J₀² + J₁²)/2
        amplitude = 1.0 / np.sqrt(np.pi * R ** 2 * (j0 ** 2 + j1 ** 2))
    else:
        k = _ball_root(R, alpha)
        integral = 0.5 * R - np.sin(2.0 * k * R) / (4.0 * k)
        amplitude = k / np.sqrt(4.0 * np.pi * integral)

    mu1 = k * k
    logger.debug(f"Robin radial n={n}, R={R}, α={alpha}: k = {k:.15g}, μ₁ = {mu1:.15g}")
    return mu1, RadialProfile(k, float(amplitude), n)


def correction_constant_radial(problem: RadialProblem, curvature_weight: float = 0.5) -> float:
    """
    C* = (c_H·α·H + μ₁/3)·w₁(R)²·|Γ| avec H = −(n−1)/R ; w₁ est constante
    sur la sphère, l'intégrale de bord se réduit à un produit.

    curvature_weight = 0.5 est le poids moyenné sur la couche ; 1.0 donne le
    poids plein αH.
    """
    mu1, w1 = robin_mu1(problem)
    trace = float(w1(problem.R))
    integrand = curvature_weight * problem.alpha * problem.mean_curvature + mu1 / 3.0
    return integrand * trace ** 2 * problem.interface_measure
