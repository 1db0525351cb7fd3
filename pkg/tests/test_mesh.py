# -*- coding: utf-8 -*-
"""
Tests du maillage conforme Ω ∪ Σ_ε
"""
import numpy as np
import pandas as pd
import pytest

from core.exceptions import ConfigError, GeometryError
from modules.assembly import assemble_two_phase
from modules.eigensolver import smallest_eigenpair
from modules.geometry import TWO_PI, circle, ellipse, fourier
from modules.mesh import (
    INTERIOR,
    LAYER,
    build_mesh,
    export_mesh_csv,
    interior_submesh,
    mesh_tables,
)
from modules.radial import RadialProblem, richardson_lambda
from tests.test_geometry import shifted_circle


class TestStructure:
    """Propriétés combinatoires du maillage"""

    def test_positive_areas_and_euler(self, disk_mesh):
        assert np.all(disk_mesh.areas() > 0.0)
        assert disk_mesh.euler_characteristic() == 2

    def test_ellipse_euler(self):
        mesh = build_mesh(ellipse(1.5, 1.0), 0.05, 48, 4, 12)
        assert np.all(mesh.areas() > 0.0)
        assert mesh.euler_characteristic() == 2

    def test_node_counts(self, disk_mesh):
        assert len(disk_mesh.interface_nodes) == 32
        assert len(disk_mesh.outer_nodes) == 32
        assert disk_mesh.n_nodes == disk_mesh.n_interior_nodes + 4 * 32
        assert disk_mesh.interface_nodes[-1] == disk_mesh.n_interior_nodes - 1

    def test_interface_chart_coordinates(self, disk_mesh):
        t = disk_mesh.node_t[disk_mesh.interface_nodes]
        np.testing.assert_allclose(t, TWO_PI * np.arange(32) / 32)
        np.testing.assert_allclose(disk_mesh.node_tau[disk_mesh.interface_nodes], 0.0)
        np.testing.assert_allclose(disk_mesh.node_tau[disk_mesh.outer_nodes], 0.05)
        layer_tau = disk_mesh.node_tau[disk_mesh.n_interior_nodes:]
        assert np.all((layer_tau > 0.0) & (layer_tau <= 0.05))

    def test_interface_nodes_on_curve(self, disk_mesh):
        radii = np.linalg.norm(disk_mesh.nodes[disk_mesh.interface_nodes], axis=1)
        np.testing.assert_allclose(radii, 1.0, rtol=1e-14)
        radii = np.linalg.norm(disk_mesh.nodes[disk_mesh.outer_nodes], axis=1)
        np.testing.assert_allclose(radii, 1.05, rtol=1e-14)

    def test_layer_triangles_touch_layer_nodes_only(self, disk_mesh):
        layer_triangles = disk_mesh.triangles[disk_mesh.tags == LAYER]
        interface = set(disk_mesh.interface_nodes.tolist())
        for triangle in layer_triangles:
            for node in triangle:
                assert node >= disk_mesh.n_interior_nodes or node in interface

    def test_interior_only(self, unit_circle):
        mesh = build_mesh(unit_circle, 0.0, 32, 4, 8)
        assert not mesh.has_layer
        np.testing.assert_array_equal(mesh.outer_nodes, mesh.interface_nodes)
        assert mesh.n_nodes == mesh.n_interior_nodes


class TestAreas:
    """Aires totales et de couche"""

    def test_total_area(self, unit_circle):
        mesh = build_mesh(unit_circle, 0.1, 64, 4, 16)
        np.testing.assert_allclose(mesh.area(), np.pi * 1.1 ** 2, rtol=5e-3)

    def test_layer_area(self, unit_circle):
        mesh = build_mesh(unit_circle, 0.1, 64, 4, 16)
        np.testing.assert_allclose(mesh.region_area(LAYER), 0.21 * np.pi, rtol=5e-3)
        np.testing.assert_allclose(mesh.region_area(INTERIOR) + mesh.region_area(LAYER), mesh.area())

    def test_quadratic_area_convergence(self, unit_circle):
        exact = np.pi * 1.1 ** 2
        coarse = build_mesh(unit_circle, 0.1, 64, 4, 16)
        fine = build_mesh(unit_circle, 0.1, 128, 4, 32)
        ratio = abs(coarse.area() - exact) / abs(fine.area() - exact)
        assert 3.5 < ratio < 4.5


class TestEigenvalueConvergence:
    """λ₁ du disque revêtu contre l'oracle radial"""

    def test_eigenvalue_error_against_radial_oracle(self, unit_circle):
        eps = 0.04
        oracle, _, _ = richardson_lambda(RadialProblem(R=1.0, n=2, alpha=1.0, eps=eps), levels=3)
        errors = []
        for n_boundary, n_layer, levels in ((64, 4, 16), (128, 8, 32)):
            mesh = build_mesh(unit_circle, eps, n_boundary, n_layer, levels)
            errors.append(abs(smallest_eigenpair(*assemble_two_phase(mesh, 1.0, eps)).value - oracle))
        assert errors[0] / errors[1] >= 3.5


class TestErrors:

    def test_thin_layer_resolution(self, unit_circle):
        with pytest.raises(ConfigError):
            build_mesh(unit_circle, 0.1, 32, 3, 8)

    def test_invalid_resolution(self, unit_circle):
        with pytest.raises(ConfigError):
            build_mesh(unit_circle, 0.1, 2, 4, 8)

    def test_not_star_shaped(self):
        with pytest.raises(ConfigError):
            build_mesh(shifted_circle(3.0), 0.1, 32, 4, 8)

    def test_layer_too_thick(self):
        with pytest.raises(GeometryError):
            build_mesh(fourier(1.0, [0.0, 0.0, 0.3]), 0.3, 64, 4, 16)


class TestSubmeshAndExport:

    def test_interior_submesh(self, disk_mesh):
        interior = interior_submesh(disk_mesh)
        assert interior.n_nodes == disk_mesh.n_interior_nodes
        assert not interior.has_layer
        np.testing.assert_allclose(interior.area(), disk_mesh.region_area(INTERIOR))
        np.testing.assert_array_equal(interior.nodes, disk_mesh.nodes[:disk_mesh.n_interior_nodes])

    def test_submesh_matches_interior_mesh(self, disk_mesh, disk_interior):
        interior = interior_submesh(disk_mesh)
        np.testing.assert_allclose(interior.nodes, disk_interior.nodes)
        np.testing.assert_array_equal(interior.triangles, disk_interior.triangles)

    def test_tables(self, disk_mesh):
        nodes, triangles = mesh_tables(disk_mesh)
        assert list(nodes.columns) == ["node_id", "x", "y"]
        assert list(triangles.columns) == ["tri_id", "n0", "n1", "n2", "tag"]
        assert set(triangles["tag"]) == {INTERIOR, LAYER}

    def test_export_csv(self, disk_mesh, tmp_path):
        nodes_path, triangles_path = export_mesh_csv(disk_mesh, tmp_path / "mesh")
        nodes = pd.read_csv(nodes_path)
        triangles = pd.read_csv(triangles_path)
        assert len(nodes) == disk_mesh.n_nodes
        assert len(triangles) == len(disk_mesh.triangles)
        np.testing.assert_allclose(nodes[["x", "y"]].to_numpy(), disk_mesh.nodes, rtol=1e-15)
