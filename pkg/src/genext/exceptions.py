"""Custom exceptions used across genext modules."""

from pydantic import ValidationError as PydanticValidationError


class GenextError(Exception):
    """Base class for every error raised by the engine."""


class SubsetIndexError(GenextError, IndexError):
    """Raised when a colex index lies outside [0, C(n, k))."""


class SeriesError(GenextError, ValueError):
    """Raised for undefined series operations (negative shift, order of zero, ...)."""


class DegreeRangeError(GenextError, ValueError):
    """Raised when a degree, rank index or subset size is out of range."""


class TheoremHypothesisError(GenextError, ValueError):
    """Raised when a parity hypothesis of a theorem or closed form is violated."""


class ConjectureInconsistentError(GenextError):
    """Raised when a conjectural closed form cannot be evaluated consistently."""


class InfeasibleSizeError(GenextError):
    """Raised when a requested computation implies a matrix above the size limit."""

    def __init__(self, n: int, degrees: tuple[int, ...], rows: int, cols: int, limit: int):
        self.n = n
        self.degrees = degrees
        self.rows = rows
        self.cols = cols
        self.limit = limit
        super().__init__(
            f"infeasible cell n={n}, degrees={list(degrees)}: largest matrix "
            f"{rows}x{cols} exceeds {limit} entries"
        )


class ExpressionParseError(GenextError, ValueError):
    """Raised when a series expression cannot be parsed."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class ExpectedDataError(GenextError):
    """Raised when a bundled expected-table file is malformed."""


__all__ = [
    "ConjectureInconsistentError",
    "DegreeRangeError",
    "ExpectedDataError",
    "ExpressionParseError",
    "GenextError",
    "InfeasibleSizeError",
    "PydanticValidationError",
    "SeriesError",
    "SubsetIndexError",
    "TheoremHypothesisError",
]
