# -*- coding: utf-8 -*-
"""
Moteur de balayage en ε : résolution à chaque ε sur une échelle de
résolutions, extrapolation de Richardson en h, diagnostics au niveau le plus
fin, ajustement de la pente s₀ et comparaison avec C*.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional
import json
import logging

import numpy as np
import pandas as pd

from config.solver import SOLVER_CONFIG
from config.sweep import RESOLUTION_CHECK
from core.adapters import SweepConfig
from core.convergence import SlopeFit, fit_slope, richardson_extrapolate
from core.exceptions import FitError, SpectraError
from modules.assembly import assemble_robin, assemble_two_phase
from modules.asymptotics import (
    RobinSolution,
    correction_integral,
    radial_test_function_quotient,
    solve_robin,
    test_function_quotient,
    upper_bound_chain,
)
from modules.diagnostics import (
    band_checks,
    diagnose,
    empirical_exponent,
    h2_energy,
    radial_fourier_c1,
    radial_layer_energy,
    radial_layer_mass,
    radial_robin_residual,
)
from modules.eigensolver import dense_spectrum, smallest_eigenpair
from modules.geometry import BoundaryCurve, curve_from_spec
from modules.geometry.curves import curve_summary
from modules.mesh import build_mesh, interior_submesh
from modules.radial import (
    RadialProblem,
    build_radial_grid,
    correction_constant_radial,
    interface_flux_jump,
    refine_grid,
    richardson_lambda,
    robin_mu1,
)

logger = logging.getLogger(__name__)

# Colonnes du contrat CSV, dans l'ordre
SWEEP_COLUMNS = [
    "eps", "lambda1", "mu1_minus_lambda1", "slope", "tan_energy",
    "robin_residual", "c1", "layer_mass",
]
EXTRA_COLUMNS = [
    "quotient", "quotient_extrapolated", "lambda1_mesh", "mu1_mesh", "mu1_extrapolated",
    "layer_energy", "normal_energy", "c2", "h2_energy", "flux_jump", "richardson_correction", "levels",
]


class SweepError(SpectraError):
    """Erreur spécifique au balayage"""
    pass


@dataclass
class Reference:
    """Objets limites ε → 0 : μ₁ (extrapolé en h pour le backend fem) et C*"""
    mu1: float
    cstar: float
    cstar_full: float
    mu1_levels: List[float] = field(default_factory=list)


@dataclass
class SweepResult:
    """Table par ε et synthèse de la comparaison pente / C*"""
    config: SweepConfig
    reference: Reference
    rows: List[Dict]
    fit: SlopeFit
    upper_bound: Dict
    checks: Dict[str, bool]
    exponents: Dict[str, float]
    warnings: List[str] = field(default_factory=list)

    @property
    def discrepancy(self) -> float:
        cstar = self.reference.cstar
        return abs(self.fit.slope - cstar) / abs(cstar) if cstar != 0.0 else float("inf")

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def table(self) -> pd.DataFrame:
        return rows_to_table(self.rows)

    def summary(self) -> Dict:
        return {
            "name": self.config.name,
            "backend": self.config.backend,
            "schema_version": self.config.schema_version,
            "alpha": self.config.alpha,
            "curvature_weight": self.config.curvature_weight,
            "mu1": self.reference.mu1,
            "s0": self.fit.slope,
            "D": self.fit.next_order,
            "linear_slope": self.fit.linear_slope,
            "Cstar": self.reference.cstar,
            "Cstar_full_weight": self.reference.cstar_full,
            "discrepancy": self.discrepancy,
            "pointwise_slopes": [s for _, s in self.fit.pointwise],
            "upper_bound": self.upper_bound,
            "checks": self.checks,
            "exponents": self.exponents,
            "warnings": self.warnings,
            "passed": self.passed,
        }


def rows_to_table(rows: List[Dict]) -> pd.DataFrame:
    table = pd.DataFrame(rows)
    columns = [c for c in SWEEP_COLUMNS + EXTRA_COLUMNS if c in table.columns]
    return table[columns] if len(table) else pd.DataFrame(columns=SWEEP_COLUMNS)


def scaled_resolution(resolution: Dict, level: int) -> Dict:
    """Résolution du niveau `level` (chaque niveau double toutes les tailles)"""
    return {key: value * 2 ** level for key, value in resolution.items()}


def _json_default(value):
    """Types numpy dans summary.json / error.json"""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Type non sérialisable: {type(value).__name__}")


def _fem_curve(config: SweepConfig) -> BoundaryCurve:
    return curve_from_spec(config.curve)


def fem_reference(config: SweepConfig) -> Reference:
    """μ₁ extrapolé sur l'échelle de maillages de Ω, C* sur le maillage le plus fin"""
    curve = _fem_curve(config)
    mu_levels, robin = [], None
    for level in range(config.levels):
        res = scaled_resolution(config.resolution, level)
        interior = build_mesh(curve, 0.0, res["n_boundary"], res["n_layer"], res["interior_levels"])
        robin = solve_robin(interior, curve, config.alpha, tol=config.eig_tol)
        mu_levels.append(robin.mu1)

    mu1 = richardson_extrapolate(mu_levels)
    extrapolated = RobinSolution(mu1, robin.w, robin.alpha, robin.mesh, robin.pair)
    return Reference(
        mu1=mu1,
        cstar=correction_integral(extrapolated, curve, config.curvature_weight),
        cstar_full=correction_integral(extrapolated, curve, 1.0),
        mu1_levels=mu_levels
    )


def radial_reference(config: SweepConfig) -> Reference:
    problem = RadialProblem(config.R, config.dim, config.alpha, 0.0)
    mu1, _ = robin_mu1(problem)
    return Reference(
        mu1=mu1,
        cstar=correction_constant_radial(problem, config.curvature_weight),
        cstar_full=correction_constant_radial(problem, 1.0),
        mu1_levels=[mu1]
    )


def compute_reference(config: SweepConfig) -> Reference:
    return radial_reference(config) if config.backend == "radial" else fem_reference(config)


def _radial_point(config: SweepConfig, eps: float, levels: int) -> Dict:
    """
    Point radial. Φ ne dépend que de r : l'énergie tangentielle de couche est
    nulle par symétrie et toute l'énergie de couche est normale. μ₁ est exact.
    """
    problem = RadialProblem(config.R, config.dim, config.alpha, eps)
    res = config.resolution
    lam, values, finest = richardson_lambda(
        problem, levels, res["interior_elements"], res["layer_elements"],
        tol=config.eig_tol, seed=config.seed
    )
    mu1, profile = robin_mu1(problem)

    # Mêmes grilles que richardson_lambda
    grid = build_radial_grid(problem.R, eps, res["interior_elements"], res["layer_elements"])
    quotients = []
    for level in range(levels):
        if level > 0:
            grid = refine_grid(grid)
        quotients.append(radial_test_function_quotient(problem, grid, profile))

    layer_energy = radial_layer_energy(finest)
    return {
        "eps": eps,
        "lambda1": lam,
        "tan_energy": 0.0,
        "robin_residual": radial_robin_residual(finest),
        "c1": radial_fourier_c1(finest, profile),
        "layer_mass": radial_layer_mass(finest),
        "quotient": quotients[-1],
        "quotient_extrapolated": richardson_extrapolate(quotients),
        "lambda1_mesh": values[-1],
        "mu1_mesh": mu1,
        "mu1_extrapolated": mu1,
        "layer_energy": layer_energy,
        "normal_energy": layer_energy,
        "c2": None,
        "h2_energy": h2_energy(finest),
        "flux_jump": interface_flux_jump(finest),
        "richardson_correction": abs(lam - values[-1]),
        "levels": levels,
    }


def _second_robin_eigenfunction(interior, curve: BoundaryCurve, alpha: float) -> Optional[np.ndarray]:
    if interior.n_nodes > SOLVER_CONFIG["dense_limit"]:
        return None
    A, B = assemble_robin(interior, curve, alpha)
    _, vectors = dense_spectrum(A, B)
    return vectors[:, 1]


def _fem_point(config: SweepConfig, eps: float, levels: int) -> Dict:
    """
    Point 2D. À chaque niveau : λ₁ bi-phasique, μ₁ de Robin sur le sous-maillage
    de Ω et quotient de la fonction test, tous trois extrapolés en h.
    """
    curve = _fem_curve(config)
    values, mu_values, quotients = [], [], []
    mesh = pair = robin = None
    for level in range(levels):
        res = scaled_resolution(config.resolution, level)
        mesh = build_mesh(curve, eps, res["n_boundary"], res["n_layer"], res["interior_levels"])
        pencil = assemble_two_phase(mesh, config.alpha, eps)
        pair = smallest_eigenpair(*pencil, tol=config.eig_tol, seed=config.seed)
        robin = solve_robin(interior_submesh(mesh), curve, config.alpha, tol=config.eig_tol)
        values.append(pair.value)
        mu_values.append(robin.mu1)
        quotients.append(test_function_quotient(robin, mesh, config.alpha, eps, pencil=pencil))
    lam = richardson_extrapolate(values)

    report = diagnose(
        pair, mesh, robin, curve, config.alpha, eps,
        second_eigenfunction=_second_robin_eigenfunction(robin.mesh, curve, config.alpha)
    )
    return {
        "eps": eps,
        "lambda1": lam,
        "tan_energy": report.tangential_energy,
        "robin_residual": report.robin_residual,
        "c1": report.c1,
        "layer_mass": report.layer_mass,
        "quotient": quotients[-1],
        "quotient_extrapolated": richardson_extrapolate(quotients),
        "lambda1_mesh": values[-1],
        "mu1_mesh": mu_values[-1],
        "mu1_extrapolated": richardson_extrapolate(mu_values),
        "layer_energy": report.layer_energy,
        "normal_energy": report.normal_energy,
        "c2": report.c2,
        "h2_energy": None,
        "flux_jump": None,
        "richardson_correction": abs(lam - values[-1]),
        "levels": levels,
    }


def solve_point(config: SweepConfig, eps: float, cstar_estimate: float) -> Dict:
    """
    Un point du balayage, avec contrôle de résolution : si la correction de
    Richardson dépasse factor·ε_min·max(|C*|, plancher), un niveau est ajouté.
    """
    solver = _radial_point if config.backend == "radial" else _fem_point
    levels = config.levels
    row = solver(config, eps, levels)

    threshold = RESOLUTION_CHECK["factor"] * min(config.eps) * max(abs(cstar_estimate), RESOLUTION_CHECK["cstar_floor"])
    extra = 0
    while row["richardson_correction"] >= threshold and extra < RESOLUTION_CHECK["max_extra_levels"]:
        logger.warning(
            f"ε = {eps}: correction de Richardson {row['richardson_correction']:.3e} >= {threshold:.3e}, "
            f"ajout d'un niveau de résolution"
        )
        extra += 1
        row = solver(config, eps, levels + extra)

    logger.info(f"ε = {eps}: λ₁ = {row['lambda1']:.12g} ({row['levels']} niveaux)")
    return row


class SweepEngine:
    """
    Moteur de balayage - indépendant de la CLI
    """

    def __init__(self, config: SweepConfig):
        self.config = config
        self.reference: Optional[Reference] = None
        self.rows: List[Dict] = []
        self.warnings: List[str] = []

    def run(self) -> SweepResult:
        """
        Exécute le balayage complet et écrit sweep.csv et summary.json.

        Raises:
            SweepError: en cas d'échec, après écriture de la table partielle et de error.json
        """
        try:
            logger.info(f"Début du balayage '{self.config.name}' ({self.config.backend}, ε = {self.config.eps})")
            self.run_points()
            result = self._compile_results()
            self._write_outputs(result)

            logger.info(
                f"Balayage terminé: s₀ = {result.fit.slope:.8g}, C* = {result.reference.cstar:.8g}, "
                f"écart relatif {result.discrepancy:.3%}"
            )
            return result

        except SweepError:
            raise
        except Exception as e:
            logger.error(f"Erreur balayage: {str(e)}", exc_info=True)
            self._write_failure(e)
            raise SweepError(f"Échec du balayage: {str(e)}")

    def run_points(self) -> List[Dict]:
        """Référence ε → 0 puis lignes par ε (sans ajustement ni écriture)"""
        self._log_geometry()
        if self.reference is None:
            self.reference = compute_reference(self.config)
            logger.info(f"μ₁ = {self.reference.mu1:.12g}, C* = {self.reference.cstar:.10g}")
        self._run_points()
        return self.rows

    def _log_geometry(self):
        if self.config.backend == "fem":
            total_length, area, max_kappa = curve_summary(_fem_curve(self.config))
            logger.info(f"Courbe {self.config.curve}: longueur {total_length:.6f}, aire {area:.6f}, κ max {max_kappa:.4f}")

    def _run_points(self):
        """Points exécutés en parallèle jusqu'à `workers`, fusion dans l'ordre des ε"""
        config, cstar = self.config, self.reference.cstar
        completed: Dict[float, Dict] = {}

        if config.workers == 1:
            for eps in config.eps:
                completed[eps] = solve_point(config, eps, cstar)
                self.rows = self._ordered(completed)
        else:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                futures = {pool.submit(solve_point, config, eps, cstar): eps for eps in config.eps}
                try:
                    for future in as_completed(futures):
                        completed[futures[future]] = future.result()
                        self.rows = self._ordered(completed)
                except Exception:
                    for future in futures:
                        future.cancel()
                    raise

        for row in self.rows:
            # μ₁ extrapolé sur les mêmes niveaux que λ₁(ε)
            row["mu1_minus_lambda1"] = row["mu1_extrapolated"] - row["lambda1"]
            row["slope"] = row["mu1_minus_lambda1"] / row["eps"]

    def _ordered(self, completed: Dict[float, Dict]) -> List[Dict]:
        return [completed[eps] for eps in self.config.eps if eps in completed]

    def _compile_results(self) -> SweepResult:
        eps = [row["eps"] for row in self.rows]
        deltas = [row["mu1_minus_lambda1"] for row in self.rows]

        # Ajustement sur les trois plus petits ε, estimations ponctuelles sur tous
        fit = fit_slope(eps[-3:], deltas[-3:])
        fit.pointwise = [(e, d / e) for e, d in zip(eps, deltas)]

        # λ₁ ≤ Q sur le maillage le plus fin ; pentes sur Q et μ₁ extrapolés sur les mêmes niveaux
        upper = upper_bound_chain(
            eps,
            [r["lambda1_mesh"] for r in self.rows],
            [r["quotient"] for r in self.rows],
            [r["mu1_extrapolated"] for r in self.rows],
            slope_quotients=[r["quotient_extrapolated"] for r in self.rows]
        )
        checks = band_checks(eps, self.rows)
        checks["lambda_below_quotient"] = upper["lambda_below_quotient"]
        checks["quotient_slope_bounded"] = upper["slope_bounded"]

        for row in self.rows:
            if row["levels"] > self.config.levels:
                self.warnings.append(f"ε = {row['eps']}: résolution augmentée à {row['levels']} niveaux")

        result = SweepResult(
            config=self.config,
            reference=self.reference,
            rows=self.rows,
            fit=fit,
            upper_bound=upper,
            checks=checks,
            exponents=self._exponents(eps),
            warnings=self.warnings
        )
        if self.config.tolerance is not None:
            checks["slope_matches_cstar"] = bool(result.discrepancy < self.config.tolerance)
        return result

    def _exponents(self, eps: List[float]) -> Dict[str, float]:
        """Exposants empiriques ε^p, consignés sans critère"""
        series = {
            "tan_energy": [r["tan_energy"] for r in self.rows],
            "robin_residual": [r["robin_residual"] for r in self.rows],
            "layer_mass": [r["layer_mass"] for r in self.rows],
            "c1_defect": [abs(r["c1"] - 1.0) for r in self.rows],
            "mu1_minus_lambda1": [r["mu1_minus_lambda1"] for r in self.rows],
        }
        exponents = {}
        for name, values in series.items():
            try:
                exponents[name] = empirical_exponent(eps, values)
            except FitError:
                continue
        return exponents

    def _output_dir(self) -> Path:
        out = Path(self.config.out)
        out.mkdir(parents=True, exist_ok=True)
        return out

    def _write_outputs(self, result: SweepResult):
        out = self._output_dir()
        result.table().to_csv(out / "sweep.csv", index=False, float_format="%.12e")
        with open(out / "summary.json", "w", encoding="utf-8") as f:
            json.dump(result.summary(), f, indent=2, default=_json_default)
        logger.info(f"Résultats écrits dans {out}")

    def _write_failure(self, error: Exception):
        """Table partielle et enregistrement de l'erreur"""
        try:
            out = self._output_dir()
            rows_to_table(self.rows).to_csv(out / "sweep.csv", index=False, float_format="%.12e")
            record = {
                "error": str(error),
                "type": type(error).__name__,
                "completed_eps": [row["eps"] for row in self.rows],
                "config": self.config.to_dict(),
            }
            residual = getattr(error, "residual", None)
            if residual is not None:
                record["residual"] = residual
            with open(out / "error.json", "w", encoding="utf-8") as f:
                json.dump(record, f, indent=2, default=_json_default)
        except OSError as e:
            logger.error(f"Impossible d'écrire le rapport d'erreur: {e}")


def run_sweep(config: SweepConfig) -> SweepResult:
    """Point d'entrée fonctionnel du balayage"""
    return SweepEngine(config).run()
