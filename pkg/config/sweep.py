# -*- coding: utf-8 -*-
"""
Paramètres par défaut des balayages en ε et des critères de validation
"""
import os

from dotenv import load_dotenv

load_dotenv()

SCHEMA_VERSION = 1

DEFAULT_SWEEP = {
    "schema_version": SCHEMA_VERSION,
    "backend": "radial",
    "alpha": 1.0,
    "eps": [0.04, 0.02, 0.01, 0.005],
    "levels": 2,
    "curvature_weight": 0.5,
    "workers": int(os.getenv("SPECTRA_WORKERS", "1")),
    "out": os.getenv("SPECTRA_OUT_DIR", "results"),
}

# Critères de bande des diagnostics (les constantes de la théorie ne sont pas connues)
BAND_CONFIG = {
    "scaling_band": 3.0,        # ratio quantité/ε : max <= bande × valeur au plus grand ε
    "upper_bound_stability": 1.2,
    "layer_mass_margin": 2.0,
    "h2_band": 2.0,
    "tangential_negligible": 1e-8,  # E_tan / énergie de couche sous ce seuil : nulle par symétrie
}

# Garde-fou discrétisation : correction de Richardson < facteur × ε_min × |C*|
RESOLUTION_CHECK = {
    "factor": 0.1,
    "cstar_floor": 0.05,
    "max_extra_levels": 1,
}
