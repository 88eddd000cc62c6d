"""Numeric defaults and limits

Everything tunable without touching algorithm code lives here.
"""


class ArithmeticConstants:
    """Limits for scalar fields and series"""

    MAX_PRIME: int = 2**31
    MIN_PRECISION: int = 1


class EnumerationConstants:
    """Defaults for exhaustive searches"""

    DEFAULT_BUDGET: int = 10_000_000
    DEFAULT_WORKERS: int = 1


class CliConstants:
    """Defaults and exit codes for the command-line front door"""

    DEFAULT_FIELD: str = "rational"
    DEFAULT_PRECISION: int = 16
    MIN_PRECISION: int = 2

    EXIT_OK: int = 0
    EXIT_SCHEMA: int = 2
    EXIT_PRECISION: int = 3
    EXIT_BUDGET: int = 4
    EXIT_DOMAIN: int = 5


# Convenience access
ARITH = ArithmeticConstants()
ENUMERATION = EnumerationConstants()
CLI = CliConstants()
