"""Domain-specific exception types."""

from enum import Enum


class ErrorCategory(str, Enum):
    """How an error surfaces at the command line.

    Audit findings are reports, not exceptions, so the categories here cover
    rejected inputs, exhausted budgets and broken invariants.
    """

    VIOLATION = "violation"
    BUDGET = "budget"
    INPUT = "input"
    INTERNAL = "internal"


class DomainError(Exception):
    """Base exception for all domain errors.

    All domain-specific exceptions should extend this class to enable
    consistent error handling across layers.
    """

    category: ErrorCategory = ErrorCategory.INPUT

    def __init__(self, message: str, code: str = "DOMAIN_ERROR") -> None:
        """Initialize domain error with message and error code.

        Args:
            message: Human-readable error description
            code: Error code for client handling
        """
        super().__init__(message)
        self.code = code


class InvalidIntervalError(DomainError):
    """Raised when an interval [lo, hi] of alternatives is empty or out of range.

    Examples:
        - lo ranked after hi in the natural order
        - Endpoint outside 1..m
    """

    def __init__(self, message: str) -> None:
        """Initialize with interval validation error message."""
        super().__init__(message, code="INVALID_INTERVAL")


class BadWeightsError(DomainError):
    """Raised when mixture weights are negative or do not sum to exactly 1."""

    def __init__(self, message: str) -> None:
        """Initialize with weight validation error message."""
        super().__init__(message, code="BAD_WEIGHTS")


class DegenerateSizeError(DomainError):
    """Raised when m or n is below the minimum or above the supported cap.

    Examples:
        - Fewer than 3 alternatives
        - Fewer than 2 voters
        - More alternatives than the generator cap allows
    """

    def __init__(self, message: str) -> None:
        """Initialize with size validation error message."""
        super().__init__(message, code="DEGENERATE_SIZE")


class InvalidPreferenceError(DomainError):
    """Raised when an order is not a permutation of 1..m.

    Examples:
        - Repeated alternative
        - Missing alternative
        - Orders over different m mixed in one collection
    """

    def __init__(self, message: str) -> None:
        """Initialize with preference validation error message."""
        super().__init__(message, code="INVALID_PREFERENCE")


class InvalidLotteryError(DomainError):
    """Raised when a probability vector has a negative entry or does not sum to 1."""

    def __init__(self, message: str) -> None:
        """Initialize with lottery validation error message."""
        super().__init__(message, code="INVALID_LOTTERY")


class InvalidThresholdsError(DomainError):
    """Raised when a threshold pair does not satisfy 1 <= k_lo < k_hi <= m."""

    def __init__(self, message: str) -> None:
        """Initialize with threshold validation error message."""
        super().__init__(message, code="INVALID_THRESHOLDS")


class EmptyCollectionError(DomainError):
    """Raised when an operation needs at least one element and got none."""

    def __init__(self, message: str) -> None:
        """Initialize with empty collection error message."""
        super().__init__(message, code="EMPTY_COLLECTION")


class EmptyVertexSetError(DomainError):
    """Raised when a strong-connectedness graph is requested on no vertices."""

    def __init__(self, message: str) -> None:
        """Initialize with empty vertex set error message."""
        super().__init__(message, code="EMPTY_VERTEX_SET")


class EnumerationOverflowError(DomainError):
    """Raised when path enumeration exceeds its cap."""

    category = ErrorCategory.BUDGET

    def __init__(self, message: str) -> None:
        """Initialize with overflow error message."""
        super().__init__(message, code="ENUMERATION_OVERFLOW")


class BudgetExceededError(DomainError):
    """Raised when an audit would perform more dominance checks than allowed."""

    category = ErrorCategory.BUDGET

    def __init__(self, message: str) -> None:
        """Initialize with budget error message."""
        super().__init__(message, code="BUDGET_EXCEEDED")


class NotRegularError(DomainError):
    """Raised when threshold recovery is asked for a domain that is not regular.

    Examples:
        - A peak is missing (not minimally rich)
        - No completely reversed pair (no diversity)
        - A restoration is unavoidable (not no-restoration)
    """

    def __init__(self, message: str) -> None:
        """Initialize with regularity error message."""
        super().__init__(message, code="NOT_REGULAR")


class InvalidBallotsError(DomainError):
    """Raised when a ballot table fails ballot unanimity or monotonicity.

    Examples:
        - Empty coalition ballot is not the point mass on a1
        - Grand coalition ballot is not the point mass on am
        - A superset coalition puts less mass on an upper interval
    """

    def __init__(self, message: str) -> None:
        """Initialize with ballot validation error message."""
        super().__init__(message, code="INVALID_BALLOTS")


class InternalInconsistencyError(DomainError):
    """Raised when two independent computations of the same value disagree."""

    category = ErrorCategory.INTERNAL

    def __init__(self, message: str) -> None:
        """Initialize with inconsistency error message."""
        super().__init__(message, code="INTERNAL_INCONSISTENCY")


class RequiresAnonymityError(DomainError):
    """Raised when a size-indexed check is run on non-anonymous ballots."""

    def __init__(self, message: str) -> None:
        """Initialize with anonymity requirement error message."""
        super().__init__(message, code="REQUIRES_ANONYMITY")


class CrdViolatedError(DomainError):
    """Raised when a coalition ballot has no mass on the side it must cover."""

    def __init__(self, message: str) -> None:
        """Initialize with constrained random-dictatorship error message."""
        super().__init__(message, code="CRD_VIOLATED")


class PerCapitaRequiredError(DomainError):
    """Raised when a voter ballot family built from boundary atoms is not monotone.

    This only happens when the input ballots fail per-capita monotonicity.
    """

    def __init__(self, message: str) -> None:
        """Initialize with per-capita requirement error message."""
        super().__init__(message, code="PER_CAPITA_REQUIRED")


class TerminalCaseError(DomainError):
    """Raised when refinement is requested although every support is binary."""

    def __init__(self, message: str) -> None:
        """Initialize with terminal case error message."""
        super().__init__(message, code="TERMINAL_CASE")


class NotAnonymousError(DomainError):
    """Raised when decomposition receives ballots that depend on voter identity."""

    category = ErrorCategory.VIOLATION

    def __init__(self, message: str) -> None:
        """Initialize with anonymity error message."""
        super().__init__(message, code="NOT_ANONYMOUS")


class NotCrdError(DomainError):
    """Raised when decomposition receives ballots without constrained random dictatorship."""

    category = ErrorCategory.VIOLATION

    def __init__(self, message: str) -> None:
        """Initialize with constrained random-dictatorship error message."""
        super().__init__(message, code="NOT_CRD")


class NotPerCapitaMonotoneError(DomainError):
    """Raised when anonymous ballots fail per-capita monotonicity.

    The witness describes the first failing inequality.
    """

    category = ErrorCategory.VIOLATION

    def __init__(self, message: str, witness: object = None) -> None:
        """Initialize with the failing inequality.

        Args:
            message: Human-readable error description
            witness: The per-capita witness that failed
        """
        super().__init__(message, code="NOT_PER_CAPITA_MONOTONE")
        self.witness = witness


class PreconditionFailedError(DomainError):
    """Raised when an audit needs a property the rule does not have.

    Examples:
        - Uncompromising check on a rule that is not strategy-proof
        - Uncompromising check on a rule that is not unanimous
    """

    category = ErrorCategory.VIOLATION

    def __init__(self, message: str) -> None:
        """Initialize with precondition error message."""
        super().__init__(message, code="PRECONDITION_FAILED")


class MalformedInputError(DomainError):
    """Raised when an input file or argument cannot be parsed."""

    def __init__(self, message: str) -> None:
        """Initialize with parse error message."""
        super().__init__(message, code="MALFORMED_INPUT")
