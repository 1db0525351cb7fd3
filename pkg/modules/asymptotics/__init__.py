# -*- coding: utf-8 -*-
"""
Interface publique du module Asymptotique.
Problème de Robin limite, constante C*, majoration par fonction test.
"""
from .robin_limit import RobinSolution, solve_robin
from .correction import correction_integrand, correction_integral, predicted_lambda
from .upper_bound import (
    test_function_values,
    test_function_quotient,
    test_function_split,
    radial_test_function_quotient,
    upper_bound_chain,
)

__all__ = [
    'RobinSolution', 'solve_robin', 'correction_integrand', 'correction_integral',
    'predicted_lambda', 'test_function_values', 'test_function_quotient',
    'test_function_split', 'radial_test_function_quotient', 'upper_bound_chain'
]
