# -*- coding: utf-8 -*-
"""
Fonctions de Bessel J₀, J₁ et recherche de racines par bissection encadrée
"""
from typing import Callable, Tuple
import logging
import math

import numpy as np
from scipy import optimize, special

from config.solver import RADIAL_CONFIG
from core.exceptions import DomainError, NumericalError

logger = logging.getLogger(__name__)


def bessel_j(order: int, x):
    """
    J₀ ou J₁ (scipy.special), prolongées aux x < 0 par parité
    (J₀ paire, J₁ impaire).
    """
    x = np.asarray(x, dtype=float)
    if order == 0:
        return special.j0(np.abs(x))
    if order == 1:
        return np.sign(x) * special.j1(np.abs(x))
    raise DomainError(f"Ordre de Bessel non supporté: {order}")


def bessel_j_series(order: int, x: float, terms: int = 60) -> float:
    """
    Série entière Σ (−1)^m (x/2)^{2m+ν} / (m!(m+ν)!), oracle indépendant
    précis à ~1e−13 pour |x| ≤ 10.
    """
    if order not in (0, 1):
        raise DomainError(f"Ordre de Bessel non supporté: {order}")
    half = 0.5 * x
    term = half ** order / math.factorial(order)
    total = term
    for m in range(1, terms):
        term *= -half * half / (m * (m + order))
        total += term
        if abs(term) < 1e-18 * max(abs(total), 1e-300):
            break
    return total


def bracketed_root(
    f: Callable[[float], float],
    bracket: Tuple[float, float],
    fprime: Callable[[float], float] = None,
    xtol: float = None,
    newton_steps: int = None
) -> float:
    """
    Racine de f dans [a, b] : bissection jusqu'à xtol puis quelques pas de
    Newton sauvegardés (acceptés seulement s'ils restent dans l'intervalle et
    diminuent |f|).

    Raises:
        NumericalError: pas de changement de signe sur l'intervalle
    """
    xtol = RADIAL_CONFIG["bisection_tol"] if xtol is None else xtol
    newton_steps = RADIAL_CONFIG["newton_steps"] if newton_steps is None else newton_steps
    a, b = bracket

    fa, fb = f(a), f(b)
    if not (np.isfinite(fa) and np.isfinite(fb)) or fa * fb > 0.0:
        raise NumericalError(
            f"Encadrement invalide: f({a:.6g}) = {fa:.3g}, f({b:.6g}) = {fb:.3g}",
            bracket=(a, b)
        )

    root = optimize.bisect(f, a, b, xtol=xtol, maxiter=200)

    if fprime is not None:
        for _ in range(newton_steps):
            value, slope = f(root), fprime(root)
            if slope == 0.0 or not np.isfinite(slope):
                break
            candidate = root - value / slope
            if a <= candidate <= b and abs(f(candidate)) < abs(value):
                root = candidate

    return root


def first_bessel_zero(order: int = 0) -> float:
    """Premier zéro positif de J_ν par bissection sur la série entière"""
    brackets = {0: (2.0, 3.0), 1: (3.0, 4.5)}
    if order not in brackets:
        raise DomainError(f"Ordre de Bessel non supporté: {order}")
    return bracketed_root(lambda x: bessel_j_series(order, x), brackets[order])
