# -*- coding: utf-8 -*-
"""
Adapte les fichiers de configuration d'expérience au format attendu par le
moteur de balayage
"""
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, List, Optional, Union
import json
import logging

from config.solver import MESH_CONFIG, RADIAL_CONFIG, SOLVER_CONFIG
from config.sweep import DEFAULT_SWEEP, SCHEMA_VERSION
from core.exceptions import ConfigError
from modules.geometry import curve_from_spec

logger = logging.getLogger(__name__)

BACKENDS = ("radial", "fem")


@dataclass
class SweepConfig:
    """Description validée d'un balayage en ε"""
    name: str
    backend: str
    alpha: float
    eps: List[float]
    levels: int
    resolution: Dict
    curve: Optional[Dict] = None
    dim: int = 2
    R: float = 1.0
    eig_tol: float = SOLVER_CONFIG["eig_tol"]
    seed: int = SOLVER_CONFIG["seed"]
    workers: int = 1
    out: str = "results"
    curvature_weight: float = 0.5
    tolerance: Optional[float] = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict:
        return asdict(self)


def _default_resolution(backend: str) -> Dict:
    if backend == "radial":
        return {
            "interior_elements": RADIAL_CONFIG["interior_elements"],
            "layer_elements": RADIAL_CONFIG["layer_elements"],
        }
    return dict(MESH_CONFIG)


def config_to_sweep(raw: Dict, overrides: Optional[Dict] = None) -> SweepConfig:
    """
    Conversion robuste d'un dictionnaire de configuration en SweepConfig.

    Args:
        raw: contenu du fichier JSON
        overrides: valeurs de la ligne de commande (out, workers), prioritaires

    Raises:
        ConfigError: champ manquant, type ou valeur invalide
    """
    merged = dict(DEFAULT_SWEEP)
    merged.update(raw or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})

    version = merged.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ConfigError(f"schema_version {version} non supportée (attendu {SCHEMA_VERSION})")

    backend = merged.get("backend")
    if backend not in BACKENDS:
        raise ConfigError(f"Backend inconnu: {backend} (attendu {BACKENDS})")

    try:
        resolution = dict(_default_resolution(backend))
        resolution.update(merged.get("resolution") or {})
        config = SweepConfig(
            name=str(merged.get("name", backend)),
            backend=backend,
            alpha=float(merged["alpha"]),
            eps=[float(e) for e in merged["eps"]],
            levels=int(merged["levels"]),
            resolution={k: int(v) for k, v in resolution.items()},
            curve=merged.get("curve"),
            dim=int(merged.get("dim", 2)),
            R=float(merged.get("R", 1.0)),
            eig_tol=float(merged.get("eig_tol", SOLVER_CONFIG["eig_tol"])),
            seed=int(merged.get("seed", SOLVER_CONFIG["seed"])),
            workers=int(merged["workers"]),
            out=str(merged["out"]),
            curvature_weight=float(merged.get("curvature_weight", 0.5)),
            tolerance=None if merged.get("tolerance") is None else float(merged["tolerance"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Configuration invalide: {e}")

    _validate_sweep_config(config)
    return config


def _validate_sweep_config(config: SweepConfig):
    """Valide les invariants d'un balayage"""
    if config.alpha <= 0:
        raise ConfigError(f"α doit être > 0: {config.alpha}")

    eps = config.eps
    if len(eps) < 3:
        raise ConfigError(f"Au moins 3 valeurs de ε requises (reçu {len(eps)})")
    if any(e <= 0 for e in eps):
        raise ConfigError(f"Valeurs de ε non positives: {eps}")
    if any(b >= a for a, b in zip(eps[:-1], eps[1:])):
        raise ConfigError(f"Les valeurs de ε doivent être strictement décroissantes: {eps}")

    if config.levels < 2:
        raise ConfigError(f"Au moins 2 niveaux de résolution requis pour Richardson (reçu {config.levels})")
    if config.workers < 1:
        raise ConfigError(f"Nombre de workers invalide: {config.workers}")

    if config.backend == "radial":
        if config.dim not in (2, 3):
            raise ConfigError(f"Dimension radiale invalide: {config.dim}")
        if config.R <= 0 or eps[0] >= config.R:
            raise ConfigError(f"ε doit rester inférieur à R = {config.R}")
    else:
        if config.curve is None:
            raise ConfigError("Le backend fem requiert une description de courbe")
        curve = curve_from_spec(config.curve)
        if not curve.is_star_shaped():
            raise ConfigError(f"Courbe {curve.name} non étoilée par rapport à l'origine")


def load_config(path: Union[str, Path], overrides: Optional[Dict] = None) -> SweepConfig:
    """Lit un fichier JSON d'expérience et le valide"""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"Fichier de configuration introuvable: {path}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON invalide dans {path}: {e}")

    config = config_to_sweep(raw, overrides)
    logger.info(f"Configuration '{config.name}' chargée depuis {path} (backend {config.backend})")
    return config
