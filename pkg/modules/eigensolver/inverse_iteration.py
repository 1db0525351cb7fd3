# -*- coding: utf-8 -*-
"""
Plus petit couple propre du faisceau symétrique (A, B) par itération inverse
shift-invert, avec accélération par quotient de Rayleigh.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import logging

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from config.solver import SOLVER_CONFIG
from core.exceptions import DomainError, NonConvergenceError, NumericalError

logger = logging.getLogger(__name__)


@dataclass
class EigenPair:
    """
    Valeur propre λ et vecteur de coefficients x, B-normalisé (xᵀBx = 1)
    et de moyenne discrète positive.

    `attained_tol` : tolérance effectivement satisfaite, la tolérance demandée
    ou le résidu au plancher d'arrondi lorsque celui-ci la dépasse.
    """
    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    residual_history: List[float] = field(default_factory=list)
    attained_tol: Optional[float] = None


def as_sparse(matrix) -> sp.csr_matrix:
    """Accepte une matrice creuse, dense, ou un objet portant un attribut `matrix`"""
    if hasattr(matrix, "matrix"):
        matrix = matrix.matrix
    if sp.issparse(matrix):
        return sp.csr_matrix(matrix)
    return sp.csr_matrix(np.asarray(matrix, dtype=float))


def rayleigh_quotient(A, B, x) -> float:
    """
    Quotient de Rayleigh xᵀAx / xᵀBx.

    Raises:
        DomainError: dénominateur nul
    """
    A, B = as_sparse(A), as_sparse(B)
    x = np.asarray(x, dtype=float)
    denominator = float(x @ (B @ x))
    if denominator == 0.0 or not np.isfinite(denominator):
        raise DomainError("Quotient de Rayleigh: xᵀBx nul")
    return float(x @ (A @ x)) / denominator


def _factorize(A: sp.csr_matrix, B: sp.csr_matrix, shift: float):
    """Factorisation LU creuse de A − shift·B"""
    operator = (A - shift * B).tocsc() if shift != 0.0 else A.tocsc()
    try:
        return splu(operator, permc_spec=SOLVER_CONFIG["permc_spec"])
    except RuntimeError as e:
        raise NumericalError(f"Échec de la factorisation (shift = {shift:.6g}): {e}")


def _sign_fix(x: np.ndarray, B: sp.csr_matrix) -> np.ndarray:
    """Impose Σᵢ xᵢ·(ligne de B)ᵢ > 0"""
    mean = float(np.ones_like(x) @ (B @ x))
    return -x if mean < 0.0 else x


def smallest_eigenpair(
    A,
    B,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    seed: Optional[int] = None
) -> EigenPair:
    """
    Couple propre minimal de A x = λ B x.

    Itération inverse autour de 0 ; dès que le résidu relatif passe sous √tol,
    le shift est déplacé juste sous le quotient de Rayleigh courant et la
    matrice refactorisée une fois.

    Args:
        A, B: faisceau symétrique, B définie positive, A définie positive
        tol: tolérance sur ‖Ax − λBx‖ / (λ‖Bx‖)
        max_iter: nombre maximal d'itérations
        seed: graine de la perturbation du vecteur initial

    Returns:
        EigenPair B-normalisé et de signe fixé

    Raises:
        NumericalError: factorisation impossible
        NonConvergenceError: plafond d'itérations atteint
    """
    tol = SOLVER_CONFIG["eig_tol"] if tol is None else tol
    max_iter = SOLVER_CONFIG["max_iter"] if max_iter is None else max_iter
    seed = SOLVER_CONFIG["seed"] if seed is None else seed

    A, B = as_sparse(A), as_sparse(B)
    n = A.shape[0]
    if n == 0:
        raise NumericalError("Faisceau vide")

    rng = np.random.default_rng(seed)
    x = np.ones(n) + SOLVER_CONFIG["perturbation"] * rng.standard_normal(n)
    x /= np.sqrt(x @ (B @ x))

    shift = 0.0
    lu = _factorize(A, B, shift)
    history = []
    accelerated = False
    value = float(x @ (A @ x))
    residual = np.inf

    for iteration in range(1, max_iter + 1):
        y = lu.solve(B @ x)
        norm = np.sqrt(y @ (B @ y))
        if not np.isfinite(norm) or norm == 0.0:
            raise NumericalError("Itération inverse dégénérée", residual=residual)
        x = y / norm

        Bx = B @ x
        value = float(x @ (A @ x))
        residual = float(np.linalg.norm(A @ x - value * Bx)
                         / (max(abs(value), np.finfo(float).tiny) * np.linalg.norm(Bx)))
        history.append(residual)

        if residual <= tol:
            logger.debug(f"Itération inverse convergée: λ = {value:.12g}, {iteration} itérations")
            return EigenPair(value, _sign_fix(x, B), residual, iteration, history, tol)

        # Plancher d'arrondi : le résidu ne décroît plus après accélération
        if accelerated and len(history) >= 3 and history[-1] > 0.5 * history[-2] and history[-2] > 0.5 * history[-3]:
            if residual < np.sqrt(tol):
                logger.warning(
                    f"Plancher d'arrondi atteint avant la tolérance: résidu {residual:.3e} > tol {tol:.1e}, "
                    f"tolérance retenue {residual:.3e}"
                )
                return EigenPair(value, _sign_fix(x, B), residual, iteration, history, residual)

        if not accelerated and residual < np.sqrt(tol):
            shift = value * (1.0 - SOLVER_CONFIG["rq_shift_offset"])
            lu = _factorize(A, B, shift)
            accelerated = True

    raise NonConvergenceError(
        f"Itération inverse non convergée après {max_iter} itérations (résidu {residual:.3e})",
        residual=residual
    )


def dense_spectrum(A, B) -> Tuple[np.ndarray, np.ndarray]:
    """
    Spectre complet du faisceau par résolution dense (oracle pour petits systèmes).

    Returns:
        (valeurs croissantes, vecteurs B-orthonormés en colonnes, signe fixé)
    """
    A_dense = as_sparse(A).toarray()
    B_dense = as_sparse(B).toarray()
    values, vectors = sla.eigh(A_dense, B_dense)
    weights = B_dense @ np.ones(A_dense.shape[0])
    signs = np.where(weights @ vectors < 0.0, -1.0, 1.0)
    return values, vectors * signs
