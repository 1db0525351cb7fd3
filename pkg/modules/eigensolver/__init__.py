# -*- coding: utf-8 -*-
"""
Module solveur aux valeurs propres
"""
from .inverse_iteration import (
    EigenPair,
    smallest_eigenpair,
    rayleigh_quotient,
    dense_spectrum,
    as_sparse
)

__all__ = ['EigenPair', 'smallest_eigenpair', 'rayleigh_quotient', 'dense_spectrum', 'as_sparse']
