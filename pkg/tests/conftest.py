# -*- coding: utf-8 -*-
"""
Fixtures partagées : courbes de référence et petits maillages
"""
import sys
from pathlib import Path

import pytest

# Ajout du répertoire racine au path Python
ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from modules.geometry import circle, ellipse  # noqa: E402
from modules.mesh import build_mesh  # noqa: E402


@pytest.fixture(scope="session")
def root_dir() -> Path:
    return ROOT


@pytest.fixture(scope="session")
def unit_circle():
    return circle(1.0)


@pytest.fixture(scope="session")
def ellipse_21():
    return ellipse(2.0, 1.0)


@pytest.fixture(scope="session")
def disk_mesh(unit_circle):
    """Disque unité + couche ε = 0.05, résolution grossière"""
    return build_mesh(unit_circle, 0.05, 32, 4, 8)


@pytest.fixture(scope="session")
def disk_interior(unit_circle):
    """Maillage de Ω seul, même numérotation que disk_mesh"""
    return build_mesh(unit_circle, 0.0, 32, 4, 8)
