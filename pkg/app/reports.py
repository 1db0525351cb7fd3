# -*- coding: utf-8 -*-
"""
Mise en forme des résultats pour la sortie standard (JSON) et les journaux
"""
from typing import Dict, List
import json
import logging

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)


def _to_builtin(value):
    """Convertit récursivement les types numpy en types JSON natifs"""
    if isinstance(value, dict):
        return {str(k): _to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_to_builtin(v) for v in value.tolist()]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def to_json(payload: Dict) -> str:
    return json.dumps(_to_builtin(payload), indent=2)


def sweep_table_text(rows: List[Dict]) -> str:
    """Tableau lisible des colonnes principales d'un balayage"""
    if not rows:
        return "(aucun point)"
    table = pd.DataFrame(rows)
    columns = [c for c in ("eps", "lambda1", "mu1_minus_lambda1", "slope", "quotient") if c in table.columns]
    return table[columns].to_string(index=False, float_format=lambda v: f"{v:.10g}")


def log_sweep_summary(summary: Dict, rows: List[Dict]):
    """Résumé d'un balayage dans les journaux"""
    logger.info("Résultats par ε:\n" + sweep_table_text(rows))
    logger.info(
        f"s₀ = {summary['s0']:.8g} | C* = {summary['Cstar']:.8g} "
        f"(poids plein {summary['Cstar_full_weight']:.8g}) | écart {summary['discrepancy']:.3%}"
    )
    failed = [name for name, ok in summary.get("checks", {}).items() if not ok]
    if failed:
        logger.warning(f"Critères non satisfaits: {', '.join(failed)}")
    for warning in summary.get("warnings", []):
        logger.warning(warning)
