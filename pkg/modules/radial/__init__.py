# -*- coding: utf-8 -*-
"""
Interface publique du module Radial.
Oracles 1D pour le disque (n=2) et la boule (n=3).
"""
from .bessel import bessel_j, bessel_j_series, bracketed_root, first_bessel_zero
from .robin import (
    RadialProblem,
    RadialProfile,
    robin_mu1,
    robin_residual_radial,
    correction_constant_radial
)
from .two_phase import (
    RadialGrid,
    RadialSolution,
    build_radial_grid,
    refine_grid,
    assemble_radial,
    solve_two_phase_radial,
    richardson_lambda,
    interface_flux_jump
)

__all__ = [
    'bessel_j', 'bessel_j_series', 'bracketed_root', 'first_bessel_zero',
    'RadialProblem', 'RadialProfile', 'robin_mu1', 'robin_residual_radial',
    'correction_constant_radial', 'RadialGrid', 'RadialSolution', 'build_radial_grid',
    'refine_grid', 'assemble_radial', 'solve_two_phase_radial', 'richardson_lambda',
    'interface_flux_jump'
]
