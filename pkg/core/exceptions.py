# -*- coding: utf-8 -*-
"""
Gestion centralisée des erreurs métier du laboratoire spectral
"""
from typing import Optional, Tuple


class SpectraError(Exception):
    """Classe de base pour les erreurs métier"""
    pass


class GeometryError(SpectraError):
    """Géométrie invalide (courbe irrégulière, couche trop épaisse, élément inversé)"""
    pass


class DomainError(SpectraError):
    """Argument hors du domaine de définition d'une opération"""
    pass


class ConfigError(SpectraError):
    """Configuration ou paramètres incohérents"""
    def __init__(self, message="Configuration invalide"):
        self.message = message
        super().__init__(self.message)


class MeshError(SpectraError):
    """Maillage incomplet ou dégénéré"""
    pass


class AssemblyError(SpectraError):
    """Échec d'une vérification d'assemblage"""
    pass


class NumericalError(SpectraError):
    """Échec numérique (factorisation, recherche de racine, ajustement spline)"""
    def __init__(
        self,
        message: str = "Erreur numérique",
        residual: Optional[float] = None,
        bracket: Optional[Tuple[float, float]] = None
    ):
        self.message = message
        self.residual = residual
        self.bracket = bracket
        super().__init__(self.message)


class NonConvergenceError(NumericalError):
    """Nombre maximal d'itérations atteint sans convergence"""
    pass


class FitError(SpectraError):
    """Ajustement moindres carrés impossible (système de rang déficient)"""
    pass
