"""Structured logging configuration using structlog."""

import logging
import sys
from typing import Any

import structlog

from src.infrastructure.logging.context import add_run_context_processor
from src.infrastructure.logging.processors import render_fractions


def configure_logging(
    log_level: str = "warning",
    log_format: str = "console",
) -> None:
    """Configure structured logging for the command line.

    Logs go to stderr; stdout carries only command output.

    Args:
        log_level: Logging level (debug, info, warning, error, critical)
        log_format: Output format - "json" for machine-readable, "console" for humans
    """
    # Convert log level string to logging constant
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    # Build processor chain
    processors: list[Any] = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        add_run_context_processor,
        render_fractions,
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]

    # Choose renderer based on format
    if log_format == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(
            structlog.dev.ConsoleRenderer(
                colors=sys.stderr.isatty(),
                exception_formatter=structlog.dev.plain_traceback,
            )
        )

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    # Configure standard logging to work with structlog
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=numeric_level,
        force=True,  # Override any existing configuration
    )

    logging.root.setLevel(numeric_level)
