"""Error handler mapping exceptions to process exit codes."""

from enum import IntEnum

from src.domain.exceptions.domain_exceptions import DomainError, ErrorCategory
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)


class ExitCode(IntEnum):
    """Process exit codes.

    VIOLATION is informative: the tool ran and found a property failure.
    """

    OK = 0
    VIOLATION = 1
    BUDGET = 2
    INPUT = 3
    INTERNAL = 4


_BY_CATEGORY = {
    ErrorCategory.VIOLATION: ExitCode.VIOLATION,
    ErrorCategory.BUDGET: ExitCode.BUDGET,
    ErrorCategory.INPUT: ExitCode.INPUT,
    ErrorCategory.INTERNAL: ExitCode.INTERNAL,
}


class ErrorHandler:
    """Handles exceptions raised by a command and converts them to exit codes."""

    def handle_error(self, error: Exception) -> ExitCode:
        """Log the error and pick the exit code.

        Args:
            error: The exception to handle

        Returns:
            Exit code for the error's category
        """
        if isinstance(error, DomainError):
            code = _BY_CATEGORY[error.category]
            log = logger.error if code is ExitCode.INTERNAL else logger.warning
            log(
                "Command failed",
                error_type=type(error).__name__,
                error_code=error.code,
                category=error.category.value,
                message=str(error),
            )
            return code
        logger.exception("Unexpected error", error_type=type(error).__name__)
        return ExitCode.INTERNAL

    def message(self, error: Exception) -> str:
        """One-line description for stderr."""
        if isinstance(error, DomainError):
            return f"error [{error.code}]: {error}"
        return f"error: {type(error).__name__}: {error}"
