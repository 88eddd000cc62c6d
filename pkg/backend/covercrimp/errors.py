"""Exception hierarchy and structured error responses"""

from typing import Any

from covercrimp.constants import CliConstants


class CoverCrimpError(Exception):
    """Base class for every error raised by covercrimp"""

    error_type: str = "ERROR"
    exit_code: int = CliConstants.EXIT_DOMAIN

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class SchemaError(CoverCrimpError):
    """Input document does not match the expected schema"""

    error_type = "SCHEMA_VIOLATION"
    exit_code = CliConstants.EXIT_SCHEMA


class PrecisionExhaustedError(CoverCrimpError):
    """A valuation was requested that lies at or beyond the working precision"""

    error_type = "PRECISION_EXHAUSTED"
    exit_code = CliConstants.EXIT_PRECISION


class BudgetExceededError(CoverCrimpError):
    """An exhaustive search would visit more candidates than allowed"""

    error_type = "BUDGET_EXCEEDED"
    exit_code = CliConstants.EXIT_BUDGET

    def __init__(self, message: str, cardinality: int, budget: int):
        super().__init__(message, {"cardinality": cardinality, "budget": budget})
        self.cardinality = cardinality
        self.budget = budget


class DomainError(CoverCrimpError):
    """Mathematically invalid request"""

    error_type = "DOMAIN_ERROR"
    exit_code = CliConstants.EXIT_DOMAIN


class FieldMismatchError(DomainError):
    error_type = "FIELD_MISMATCH"


class NonMonicError(DomainError):
    error_type = "NON_MONIC"


class IndistinctBranchesError(DomainError):
    error_type = "INDISTINCT_BRANCHES"


class NotInvertibleError(DomainError):
    error_type = "NOT_INVERTIBLE"


class CharacteristicError(DomainError):
    error_type = "CHARACTERISTIC"


class ParityError(DomainError):
    error_type = "PARITY"


class DimensionMismatchError(DomainError):
    error_type = "DIMENSION_MISMATCH"


class InvalidTableError(DomainError):
    """Structure constants violate the algebra axioms"""

    error_type = "INVALID_TABLE"


class BranchMismatchError(DomainError):
    error_type = "BRANCH_MISMATCH"


class InconsistentProblemError(DomainError):
    error_type = "INCONSISTENT_PROBLEMS"


class DegenerateTangencyError(DomainError):
    error_type = "DEGENERATE_TANGENCY"


class DisconnectedGraphError(DomainError):
    error_type = "DISCONNECTED"


def create_error_response(
    error_type: str,
    message: str,
    details: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Create structured error response"""
    response: dict[str, Any] = {
        "error": True,
        "error_type": error_type,
        "message": message,
    }
    if details:
        response["details"] = details
    return response


def error_response_for(exc: CoverCrimpError) -> dict[str, Any]:
    """Structured error response for a raised covercrimp error"""
    return create_error_response(exc.error_type, exc.message, exc.details)
