# -*- coding: utf-8 -*-
"""
Interface publique du module Diagnostics.
Vérifications numériques des estimations intermédiaires.
"""
from .fields import (
    nodal_field,
    element_gradients,
    layer_energy_split,
    tangential_energy,
    normal_energy,
    layer_energy,
    total_energy,
    layer_mass,
    robin_residual,
    fourier_coefficient,
    fourier_c1,
)
from .radial import (
    radial_h2_energy,
    h2_energy,
    profile_h2_energy,
    radial_layer_mass,
    radial_layer_energy,
    radial_robin_residual,
    radial_fourier_c1,
)
from .report import (
    DiagnosticsReport,
    diagnose,
    ratio_bounded,
    within_band,
    is_decreasing,
    layer_mass_controlled,
    empirical_exponent,
    tangential_checks,
    band_checks,
)

__all__ = [
    'nodal_field', 'element_gradients', 'layer_energy_split', 'tangential_energy',
    'normal_energy', 'layer_energy', 'total_energy', 'layer_mass', 'robin_residual',
    'fourier_coefficient', 'fourier_c1', 'radial_h2_energy', 'h2_energy',
    'profile_h2_energy', 'radial_layer_mass', 'radial_layer_energy',
    'radial_robin_residual', 'radial_fourier_c1', 'DiagnosticsReport', 'diagnose',
    'ratio_bounded', 'within_band', 'is_decreasing', 'layer_mass_controlled',
    'empirical_exponent', 'tangential_checks', 'band_checks'
]
