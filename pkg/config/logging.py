# -*- coding: utf-8 -*-
"""
Configuration du système de logging
"""
import logging
import os
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def resolve_level(level=None) -> int:
    """Niveau explicite, sinon variable SPECTRA_LOG_LEVEL, sinon INFO"""
    if level is None:
        level = os.getenv("SPECTRA_LOG_LEVEL", "INFO")
    if isinstance(level, str):
        return getattr(logging, level.upper(), logging.INFO)
    return int(level)


def setup_logging(level=None, log_file: Optional[str] = None):
    """Configure le système de logging"""

    formatter = logging.Formatter(LOG_FORMAT)

    root_logger = logging.getLogger()
    root_logger.setLevel(resolve_level(level))

    # Pas de doublons si la CLI est appelée plusieurs fois dans un même process
    for handler in list(root_logger.handlers):
        if getattr(handler, "_spectra", False):
            root_logger.removeHandler(handler)

    # Handler console (stderr : stdout est réservé aux sorties JSON)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler._spectra = True
    root_logger.addHandler(console_handler)

    # Handler fichier optionnel
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        file_handler._spectra = True
        root_logger.addHandler(file_handler)

    return root_logger
