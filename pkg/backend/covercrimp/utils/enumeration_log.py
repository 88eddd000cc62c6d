"""Dedicated logger for exhaustive searches"""

import logging
from pathlib import Path

from covercrimp.config import settings

enumeration_logger = logging.getLogger("covercrimp.enumeration")
enumeration_logger.setLevel(logging.DEBUG)
enumeration_logger.propagate = False

if settings.debug_enumeration:
    _logs_dir = Path("logs")
    _logs_dir.mkdir(exist_ok=True)
    _enumeration_handler = logging.FileHandler(_logs_dir / "enumeration.log", encoding="utf-8")
    _enumeration_handler.setLevel(logging.DEBUG)
    _enumeration_handler.setFormatter(
        logging.Formatter("%(asctime)s [%(levelname)s] %(message)s", datefmt="%Y-%m-%d %H:%M:%S")
    )
    enumeration_logger.addHandler(_enumeration_handler)
else:
    enumeration_logger.addHandler(logging.NullHandler())
