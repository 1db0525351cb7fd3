# -*- coding: utf-8 -*-
"""
Point d'entrée en ligne de commande du laboratoire spectral

    python -m app.main radial|solve2d|robin|predict|diagnose|sweep --config <fichier> [--out dir] [--workers N]
    python -m app.main radial --dim 3 --R 1 --alpha 1 --eps 0.01 [--elements N] [--grading r]

Les résultats sont écrits en JSON sur la sortie standard, les journaux sur
la sortie d'erreur. Code de retour 0 si tous les contrôles internes passent.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

# Ajout du répertoire racine au path Python
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

from config.logging import setup_logging
from config.solver import RADIAL_CONFIG
from config.sweep import DEFAULT_SWEEP
from core.adapters import SweepConfig, load_config
from core.convergence import richardson_extrapolate
from core.exceptions import ConfigError, SpectraError
from core.sweep import SweepEngine, SweepError, compute_reference, rows_to_table, scaled_resolution
from modules.asymptotics import predicted_lambda
from modules.assembly import assemble_two_phase
from modules.diagnostics import band_checks
from modules.eigensolver import smallest_eigenpair
from modules.geometry import curve_from_spec
from modules.mesh import build_mesh, export_mesh_csv
from modules.radial import RadialProblem, correction_constant_radial, richardson_lambda, robin_mu1
from app.reports import log_sweep_summary, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _require_backend(config: SweepConfig, backend: str):
    if config.backend != backend:
        raise ConfigError(f"Commande réservée au backend '{backend}' (configuration: '{config.backend}')")


def _radial_setting(args, name: str, config: Optional[SweepConfig], default):
    """Option de la ligne de commande, sinon fichier d'expérience, sinon défaut"""
    value = getattr(args, name, None)
    if value is not None:
        return value
    return getattr(config, name) if config is not None else default


def cmd_radial(config: Optional[SweepConfig], args) -> Dict:
    """
    μ₁, λ₁(ε) extrapolé, pente (μ₁ − λ₁)/ε et C* pour le disque ou la boule.

    Enregistrement principal au plus petit ε, détail par ε dans `points`
    lorsque plusieurs ε sont demandés.
    """
    if config is not None:
        _require_backend(config, "radial")
    resolution = config.resolution if config is not None else {}

    dim = _radial_setting(args, "dim", config, 2)
    R = _radial_setting(args, "R", config, 1.0)
    alpha = _radial_setting(args, "alpha", config, DEFAULT_SWEEP["alpha"])
    eps_values = args.eps or (config.eps if config is not None else DEFAULT_SWEEP["eps"])
    elements = args.elements or resolution.get("interior_elements", RADIAL_CONFIG["interior_elements"])
    layer_elements = resolution.get("layer_elements", RADIAL_CONFIG["layer_elements"])
    levels = config.levels if config is not None else DEFAULT_SWEEP["levels"]
    weight = config.curvature_weight if config is not None else DEFAULT_SWEEP["curvature_weight"]
    tol = config.eig_tol if config is not None else None
    seed = config.seed if config is not None else None

    if not alpha > 0.0:
        raise ConfigError(f"α doit être > 0: {alpha}")

    problem = RadialProblem(R, dim, alpha, 0.0)
    mu1, _ = robin_mu1(problem)
    cstar = correction_constant_radial(problem, weight)

    points = []
    for eps in eps_values:
        lam, _, _ = richardson_lambda(
            problem.with_eps(eps), levels, elements, layer_elements,
            tol=tol, seed=seed, grading=args.grading
        )
        points.append({"eps": eps, "lambda1": lam, "slope": (mu1 - lam) / eps})

    finest = min(points, key=lambda point: point["eps"])
    record = {"mu1": mu1, "lambda1": finest["lambda1"], "slope": finest["slope"], "Cstar": cstar, "eps": finest["eps"]}
    if len(points) > 1:
        record["points"] = points
    return record


def cmd_solve2d(config: SweepConfig, args) -> Dict:
    """λ₁(ε) du problème bi-phasique 2D sur l'échelle de maillages"""
    _require_backend(config, "fem")
    curve = curve_from_spec(config.curve)
    points = []
    for eps in config.eps:
        values, mesh = [], None
        for level in range(config.levels):
            res = scaled_resolution(config.resolution, level)
            mesh = build_mesh(curve, eps, res["n_boundary"], res["n_layer"], res["interior_levels"])
            pair = smallest_eigenpair(*assemble_two_phase(mesh, config.alpha, eps), tol=config.eig_tol, seed=config.seed)
            values.append(pair.value)
        points.append({"eps": eps, "lambda1": richardson_extrapolate(values), "levels": values})
        if args.export_mesh:
            export_mesh_csv(mesh, Path(config.out) / f"mesh_eps_{eps:g}")
    return {"curve": config.curve, "points": points}


def cmd_robin(config: SweepConfig, args) -> Dict:
    """μ₁ et C* du problème de Robin 2D"""
    _require_backend(config, "fem")
    reference = compute_reference(config)
    return {
        "curve": config.curve,
        "mu1": reference.mu1,
        "mu1_levels": reference.mu1_levels,
        "Cstar": reference.cstar,
        "Cstar_full_weight": reference.cstar_full,
    }


def cmd_predict(config: SweepConfig, args) -> Dict:
    """Prédiction au premier ordre λ₁(ε) ≈ μ₁ − εC*"""
    reference = compute_reference(config)
    return {
        "mu1": reference.mu1,
        "Cstar": reference.cstar,
        "predicted_lambda": {f"{eps:g}": predicted_lambda(reference.mu1, reference.cstar, eps) for eps in config.eps},
    }


def cmd_diagnose(config: SweepConfig, args) -> Dict:
    """Diagnostics par ε (une ligne CSV par ε) et critères de bande"""
    engine = SweepEngine(config)
    rows = engine.run_points()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    rows_to_table(rows).to_csv(out / "diagnostics.csv", index=False, float_format="%.12e")
    checks = band_checks([row["eps"] for row in rows], rows)
    return {"rows": rows, "checks": checks, "passed": all(checks.values())}


def cmd_sweep(config: SweepConfig, args) -> Dict:
    result = SweepEngine(config).run()
    summary = result.summary()
    log_sweep_summary(summary, result.rows)
    return summary


COMMANDS = {
    "radial": cmd_radial,
    "solve2d": cmd_solve2d,
    "robin": cmd_robin,
    "predict": cmd_predict,
    "diagnose": cmd_diagnose,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectra", description="Laboratoire spectral couche mince / limite de Robin")
    parser.add_argument("-v", "--verbose", action="store_true", help="journaux détaillés (DEBUG)")
    parser.add_argument("--log-file", default=None, help="copie des journaux dans un fichier")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, help=command.__doc__)
        sub.add_argument("--config", required=name != "radial", help="fichier JSON d'expérience")
        sub.add_argument("--out", default=None, help="répertoire de sortie")
        sub.add_argument("--workers", type=int, default=None, help="nombre de processus")
        sub.add_argument("--eps", type=float, nargs="+", default=None, help="remplace la liste des ε")
        if name == "radial":
            sub.add_argument("--dim", type=int, choices=(2, 3), default=None, help="2 = disque, 3 = boule")
            sub.add_argument("--R", type=float, default=None, help="rayon de Ω")
            sub.add_argument("--alpha", type=float, default=None, help="paramètre α de σ_ε = αε")
            sub.add_argument("--elements", type=int, default=None, help="éléments intérieurs au niveau grossier")
            sub.add_argument("--grading", type=float, default=None, help="rapport de gradation de la grille intérieure")
        if name == "solve2d":
            sub.add_argument("--export-mesh", action="store_true", help="écrit nodes.csv / triangles.csv par ε")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(level="DEBUG" if args.verbose else None, log_file=args.log_file)

    try:
        overrides = {"out": args.out, "workers": args.workers}
        if args.command != "radial":
            overrides["eps"] = args.eps
        config = load_config(args.config, overrides) if args.config else None
        payload = COMMANDS[args.command](config, args)
    except ConfigError as e:
        logger.error(f"Configuration invalide: {e}")
        return EXIT_CONFIG
    except (SweepError, SpectraError) as e:
        logger.error(f"Échec de '{args.command}': {e}")
        return EXIT_NUMERICAL

    print(to_json(payload))
    return EXIT_OK if payload.get("passed", True) else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
