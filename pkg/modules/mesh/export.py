# -*- coding: utf-8 -*-
"""
Export CSV du maillage pour visualisation externe
"""
from pathlib import Path
from typing import Tuple, Union
import logging

import numpy as np
import pandas as pd

from .builder import Mesh2D

logger = logging.getLogger(__name__)


def mesh_tables(mesh: Mesh2D) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Tables (node id, x, y) et (tri id, n0, n1, n2, tag)"""
    nodes = pd.DataFrame({
        "node_id": np.arange(mesh.n_nodes),
        "x": mesh.nodes[:, 0],
        "y": mesh.nodes[:, 1],
    })
    triangles = pd.DataFrame({
        "tri_id": np.arange(len(mesh.triangles)),
        "n0": mesh.triangles[:, 0],
        "n1": mesh.triangles[:, 1],
        "n2": mesh.triangles[:, 2],
        "tag": mesh.tags.astype(int),
    })
    return nodes, triangles


def export_mesh_csv(mesh: Mesh2D, directory: Union[str, Path]) -> Tuple[Path, Path]:
    """Écrit nodes.csv et triangles.csv dans `directory`"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    nodes, triangles = mesh_tables(mesh)
    nodes_path = directory / "nodes.csv"
    triangles_path = directory / "triangles.csv"
    nodes.to_csv(nodes_path, index=False, float_format="%.17g")
    triangles.to_csv(triangles_path, index=False)

    logger.info(f"Maillage exporté: {nodes_path} ({len(nodes)} nœuds), {triangles_path} ({len(triangles)} triangles)")
    return nodes_path, triangles_path
