# -*- coding: utf-8 -*-
"""
Interface publique du module Assemblage
"""
from .fem import (
    SparseSymmetric,
    element_stiffness,
    element_mass,
    edge_mass,
    assemble_stiffness,
    assemble_mass,
    layer_coefficients,
    assemble_two_phase,
    interface_edge_lengths,
    boundary_mass,
    assemble_robin,
    export_matrix_coo,
)

__all__ = [
    'SparseSymmetric', 'element_stiffness', 'element_mass', 'edge_mass',
    'assemble_stiffness', 'assemble_mass', 'layer_coefficients', 'assemble_two_phase',
    'interface_edge_lengths', 'boundary_mass', 'assemble_robin', 'export_matrix_coo'
]
