# -*- coding: utf-8 -*-
"""
Paramètres numériques : solveur aux valeurs propres et grilles radiales
"""
import os

from dotenv import load_dotenv

load_dotenv()

# Itération inverse (shift-invert) sur le faisceau (A, B)
SOLVER_CONFIG = {
    "eig_tol": float(os.getenv("SPECTRA_EIG_TOL", "1e-10")),
    "max_iter": int(os.getenv("SPECTRA_MAX_ITER", "500")),
    "seed": int(os.getenv("SPECTRA_SEED", "0")),
    "perturbation": 1e-3,       # amplitude relative de la perturbation du vecteur initial
    "rq_shift_offset": 1e-6,    # décalage relatif du shift de Rayleigh sous λ
    "permc_spec": "MMD_AT_PLUS_A",
    "dense_limit": 2500,        # taille max. pour la résolution dense (oracle, c₂)
}

# Grilles 1D pour les problèmes radiaux
RADIAL_CONFIG = {
    "interior_elements": 400,
    "layer_elements": 32,
    "min_layer_elements": 8,
    "grading": 8.0,             # rapport taille max / taille min des éléments intérieurs
    "layer_grading": 2.0,       # même rapport dans la couche, raffinée vers r = R
    "bisection_tol": 1e-13,
    "newton_steps": 2,
}

# Maillage 2D par défaut
MESH_CONFIG = {
    "n_boundary": 64,
    "n_layer": 4,
    "interior_levels": 16,
}
