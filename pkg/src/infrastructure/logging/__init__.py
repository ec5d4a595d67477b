"""Structured logging infrastructure for the application."""

from src.infrastructure.logging.context import bind_run_context, clear_run_context, get_run_id
from src.infrastructure.logging.logger import bind_problem, get_logger
from src.infrastructure.logging.logging_config import configure_logging

__all__ = [
    "bind_problem",
    "bind_run_context",
    "clear_run_context",
    "configure_logging",
    "get_logger",
    "get_run_id",
]
