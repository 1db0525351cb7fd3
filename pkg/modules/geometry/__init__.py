# -*- coding: utf-8 -*-
"""
Interface publique du module Géométrie.
Courbes fermées, courbure, carte de la couche mince.
"""
from .curves import (
    BoundaryCurve,
    TWO_PI,
    circle,
    ellipse,
    fourier,
    reparametrized,
    curvature,
    mean_curvature,
    surface_measure,
    arc_length,
    length,
    turning_number_integral,
    signed_area,
    curve_from_spec,
)
from .layer import LayerChart, layer_jacobian, offset_point

__all__ = [
    'BoundaryCurve', 'TWO_PI', 'circle', 'ellipse', 'fourier', 'reparametrized',
    'curvature', 'mean_curvature', 'surface_measure', 'arc_length', 'length',
    'turning_number_integral', 'signed_area', 'curve_from_spec',
    'LayerChart', 'layer_jacobian', 'offset_point'
]
