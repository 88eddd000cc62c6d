"""Configuration management"""

import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel

from covercrimp.constants import CliConstants, EnumerationConstants

_logger = logging.getLogger(__name__)

load_dotenv()


class Settings(BaseModel):
    """Process-wide settings"""

    # Enumeration
    workers: int = EnumerationConstants.DEFAULT_WORKERS
    default_budget: int = EnumerationConstants.DEFAULT_BUDGET

    # Job defaults
    default_field: str = CliConstants.DEFAULT_FIELD
    default_precision: int = CliConstants.DEFAULT_PRECISION

    # Logging
    log_level: str = "WARNING"
    debug_enumeration: bool = False

    @staticmethod
    def _parse_optional_int(env_var: str) -> int | None:
        raw = os.getenv(env_var)
        if raw is None:
            return None
        try:
            return int(raw)
        except ValueError:
            _logger.warning(f"Invalid value for {env_var}: {raw!r}, ignoring")
            return None

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables

        Uses class field defaults, so defaults are defined in one place.
        """
        defaults = cls()
        workers = cls._parse_optional_int("COVERCRIMP_THREADS")
        budget = cls._parse_optional_int("COVERCRIMP_BUDGET")
        precision = cls._parse_optional_int("COVERCRIMP_PRECISION")
        return cls(
            workers=max(1, workers) if workers is not None else defaults.workers,
            default_budget=budget if budget is not None else defaults.default_budget,
            default_field=os.getenv("COVERCRIMP_FIELD", defaults.default_field),
            default_precision=precision if precision is not None else defaults.default_precision,
            log_level=os.getenv("COVERCRIMP_LOG_LEVEL", defaults.log_level).upper(),
            debug_enumeration=os.getenv(
                "COVERCRIMP_DEBUG_ENUMERATION", str(defaults.debug_enumeration).lower()
            ).lower()
            == "true",
        )


settings = Settings.from_env()
