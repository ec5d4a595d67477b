"""Logger utilities for structured logging."""

from typing import Any

import structlog


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:  # type: ignore[no-any-unimported]
    """Get a configured structured logger.

    Args:
        name: Logger name (usually __name__ of the module).
              If None, returns root logger.

    Returns:
        Configured structlog logger instance

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Audit finished", check="sp", holds=True)
    """
    return structlog.get_logger(name)  # type: ignore[no-any-return]


def bind_problem(n: int | None = None, m: int | None = None, **extra: Any) -> dict[str, Any]:
    """Create binding context for logs about one voting problem.

    Args:
        n: Number of voters, when known
        m: Number of alternatives, when known
        **extra: Additional context to bind, e.g. thresholds

    Returns:
        Dictionary of context to bind to logger

    Example:
        >>> logger = get_logger(__name__)
        >>> logger = logger.bind(**bind_problem(n=3, m=5, thresholds=(2, 4)))
        >>> logger.info("Decomposition started")
    """
    context: dict[str, Any] = {key: value for key, value in (("n", n), ("m", m)) if value is not None}
    context.update(extra)
    return context
