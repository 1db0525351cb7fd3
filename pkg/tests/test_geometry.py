# -*- coding: utf-8 -*-
"""
Tests du module Géométrie : courbure, mesure d'arc, carte de la couche
"""
import numpy as np
import pytest
from scipy import special

from core.exceptions import ConfigError, DomainError, GeometryError
from modules.geometry import (
    BoundaryCurve,
    LayerChart,
    TWO_PI,
    circle,
    curvature,
    curve_from_spec,
    ellipse,
    fourier,
    layer_jacobian,
    length,
    mean_curvature,
    offset_point,
    reparametrized,
    signed_area,
    surface_measure,
    turning_number_integral,
)

T_SAMPLES = np.linspace(0.0, TWO_PI, 17, endpoint=False)


def shifted_circle(cx: float) -> BoundaryCurve:
    """Cercle unité centré en (cx, 0) : non étoilé par rapport à l'origine si cx > 1"""
    def position(t):
        return np.stack([cx + np.cos(t), np.sin(t)], axis=-1)

    def first(t):
        return np.stack([-np.sin(t), np.cos(t)], axis=-1)

    def second(t):
        return np.stack([-np.cos(t), -np.sin(t)], axis=-1)

    return BoundaryCurve("shifted", position, first, second)


class TestCurvature:
    """Courbure signée κ = (p′ × p″)/|p′|³"""

    def test_unit_circle(self, unit_circle):
        np.testing.assert_allclose(curvature(unit_circle, T_SAMPLES), 1.0, rtol=1e-14)

    def test_circle_radius_two(self):
        np.testing.assert_allclose(curvature(circle(2.0), T_SAMPLES), 0.5, rtol=1e-14)

    def test_ellipse_vertex(self, ellipse_21):
        # (2, 0) : κ = a/b²
        np.testing.assert_allclose(curvature(ellipse_21, 0.0), 2.0, rtol=1e-14)

    def test_ellipse_against_tangent_angle(self, ellipse_21):
        """κ = dθ/ds, θ angle de la tangente, par différences centrées"""
        t, h = 0.7, 1e-5
        angle = lambda s: np.arctan2(*ellipse_21.tangent(s)[::-1])
        dtheta = (angle(t + h) - angle(t - h)) / (2.0 * h)
        expected = dtheta / surface_measure(ellipse_21, t)
        np.testing.assert_allclose(curvature(ellipse_21, t), expected, rtol=1e-7)

    def test_mean_curvature_sign(self, ellipse_21):
        np.testing.assert_allclose(mean_curvature(ellipse_21, T_SAMPLES), -curvature(ellipse_21, T_SAMPLES))

    def test_turning_number(self, ellipse_21):
        """Gauss–Bonnet : ∮ κ ds = 2π pour toute courbe simple fermée"""
        wavy = fourier(1.0, [0.1, 0.0, 0.05], [0.0, 0.08])
        for curve in (ellipse_21, wavy):
            np.testing.assert_allclose(turning_number_integral(curve), TWO_PI, rtol=1e-9)

    def test_reparametrization_invariance(self, ellipse_21):
        curve = reparametrized(ellipse_21, amplitude=0.4, shift=0.3)
        s = T_SAMPLES + 0.4 * np.sin(T_SAMPLES) + 0.3
        np.testing.assert_allclose(curvature(curve, T_SAMPLES), curvature(ellipse_21, s), rtol=1e-12)
        np.testing.assert_allclose(length(curve), length(ellipse_21), rtol=1e-10)

    def test_non_finite_derivatives(self):
        broken = BoundaryCurve(
            "broken",
            lambda t: np.stack([np.cos(t), np.sin(t)], axis=-1),
            lambda t: np.full(np.shape(t) + (2,), np.nan),
            lambda t: np.zeros(np.shape(t) + (2,)),
        )
        with pytest.raises(GeometryError):
            curvature(broken, 0.3)


class TestArcLength:
    """Mesure d'arc √G₀ = |p′| et longueurs"""

    def test_unit_circle(self, unit_circle):
        np.testing.assert_allclose(surface_measure(unit_circle, T_SAMPLES), 1.0, rtol=1e-14)
        np.testing.assert_allclose(length(unit_circle), TWO_PI, rtol=1e-12)

    def test_circle_radius_three(self):
        curve = circle(3.0)
        np.testing.assert_allclose(surface_measure(curve, T_SAMPLES), 3.0, rtol=1e-14)
        np.testing.assert_allclose(length(curve), 6.0 * np.pi, rtol=1e-12)

    def test_ellipse_perimeter(self, ellipse_21):
        # 4a·E(m), m = 1 − b²/a²
        expected = 4.0 * 2.0 * special.ellipe(0.75)
        np.testing.assert_allclose(length(ellipse_21), expected, rtol=1e-10)

    def test_signed_area(self, ellipse_21):
        np.testing.assert_allclose(signed_area(circle(1.5)), np.pi * 2.25, rtol=1e-12)
        np.testing.assert_allclose(signed_area(ellipse_21), 2.0 * np.pi, rtol=1e-12)


class TestLayerChart:
    """Élément de volume √G₀(1 + κτ) et points de la couche"""

    def test_circle_jacobian(self, unit_circle):
        chart = LayerChart(unit_circle, 0.2)
        np.testing.assert_allclose(layer_jacobian(chart, T_SAMPLES, 0.1), 1.1, rtol=1e-14)

    def test_zero_depth_is_arc_measure(self, ellipse_21):
        chart = LayerChart(ellipse_21, 0.1)
        np.testing.assert_allclose(
            layer_jacobian(chart, T_SAMPLES, 0.0), surface_measure(ellipse_21, T_SAMPLES), rtol=1e-14
        )

    def test_ellipse_vertex_jacobian(self, ellipse_21):
        # √G₀(0) = b = 1, κ(0) = 2
        chart = LayerChart(ellipse_21, 0.1)
        np.testing.assert_allclose(layer_jacobian(chart, 0.0, 0.05), 1.1, rtol=1e-14)

    def test_depth_out_of_range(self, unit_circle):
        chart = LayerChart(unit_circle, 0.1)
        with pytest.raises(DomainError):
            layer_jacobian(chart, 0.0, 0.2)
        with pytest.raises(DomainError):
            offset_point(chart, 0.0, -0.05)

    def test_layer_too_thick(self):
        # ρ = 1 + 0.3 cos 3t : κ ≈ −4.1 aux creux
        trefoil = fourier(1.0, [0.0, 0.0, 0.3])
        LayerChart(trefoil, 0.1)
        with pytest.raises(GeometryError):
            LayerChart(trefoil, 0.3)

    def test_invalid_thickness(self, unit_circle):
        with pytest.raises(ConfigError):
            LayerChart(unit_circle, 0.0)

    def test_offset_points(self, unit_circle, ellipse_21):
        np.testing.assert_allclose(offset_point(LayerChart(unit_circle, 0.3), 0.0, 0.2), [1.2, 0.0], atol=1e-15)
        np.testing.assert_allclose(offset_point(LayerChart(ellipse_21, 0.2), np.pi / 2, 0.1), [0.0, 1.1], atol=1e-15)

    def test_zero_depth_offset_is_curve(self, ellipse_21):
        chart = LayerChart(ellipse_21, 0.1)
        np.testing.assert_allclose(offset_point(chart, T_SAMPLES, np.zeros_like(T_SAMPLES)), ellipse_21(T_SAMPLES))

    def test_symmetric_offset(self, unit_circle):
        chart = LayerChart(unit_circle, 0.1)
        np.testing.assert_allclose(offset_point(chart, 0.0, -0.05, allow_negative=True), [0.95, 0.0], atol=1e-15)

    @pytest.mark.parametrize("curve", [ellipse(2.0, 1.0), fourier(1.0, [0.0, 0.0, 0.1])], ids=["ellipse", "fourier"])
    def test_jacobian_is_chart_determinant(self, curve):
        chart = LayerChart(curve, 0.1)
        rng = np.random.default_rng(5)
        t = rng.uniform(0.0, TWO_PI, 1000)
        tau = rng.uniform(0.0, 0.1, 1000)
        step = 1e-5
        d_t = (offset_point(chart, t + step, tau) - offset_point(chart, t - step, tau)) / (2.0 * step)
        d_tau = curve.normal(t)
        determinant = np.abs(d_t[:, 0] * d_tau[:, 1] - d_t[:, 1] * d_tau[:, 0])
        np.testing.assert_allclose(layer_jacobian(chart, t, tau), determinant, rtol=1e-7)

    @pytest.mark.parametrize("curve", [ellipse(2.0, 1.0), fourier(1.0, [0.0, 0.0, 0.1])], ids=["ellipse", "fourier"])
    def test_layer_area_identity(self, curve):
        # Aire de Σ_ε = ε|Γ| + πε² pour une courbe simple orientée positivement
        eps = 0.1
        chart = LayerChart(curve, eps)
        t = np.linspace(0.0, TWO_PI, 1000, endpoint=False)
        area = TWO_PI / len(t) * eps * np.sum(layer_jacobian(chart, t, np.full_like(t, 0.5 * eps)))
        np.testing.assert_allclose(area, eps * length(curve) + np.pi * eps ** 2, rtol=1e-10)


class TestCurveSpecs:
    """Construction depuis les fichiers de configuration"""

    def test_known_kinds(self):
        assert curve_from_spec({"kind": "circle", "R": 2.0}).params["R"] == 2.0
        assert curve_from_spec({"kind": "ellipse", "a": 1.5, "b": 1.0}).name == "ellipse"
        assert curve_from_spec({"kind": "fourier", "rho0": 1.0, "cos_coeffs": [0.1]}).name == "fourier"

    @pytest.mark.parametrize("spec", [
        {"kind": "square"},
        {"kind": "circle"},
        {"R": 1.0},
        None,
    ])
    def test_invalid_specs(self, spec):
        with pytest.raises(ConfigError):
            curve_from_spec(spec)

    def test_non_positive_profile(self):
        with pytest.raises(ConfigError):
            fourier(1.0, [1.5])

    def test_invalid_constructors(self):
        with pytest.raises(ConfigError):
            circle(-1.0)
        with pytest.raises(ConfigError):
            ellipse(1.0, 0.0)
        with pytest.raises(ConfigError):
            reparametrized(circle(1.0), amplitude=1.0)

    def test_star_shape(self, ellipse_21):
        assert ellipse_21.is_star_shaped()
        assert not shifted_circle(3.0).is_star_shaped()
