# -*- coding: utf-8 -*-
"""
Interface publique du module Maillage
"""
from .builder import (
    INTERIOR,
    LAYER,
    Mesh2D,
    build_mesh,
    interior_submesh,
)
from .export import mesh_tables, export_mesh_csv

__all__ = [
    'INTERIOR', 'LAYER', 'Mesh2D', 'build_mesh', 'interior_submesh',
    'mesh_tables', 'export_mesh_csv'
]
