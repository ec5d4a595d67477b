"""Run context for structured logging."""

import uuid
from contextvars import ContextVar
from typing import Any

# Identifies one command invocation across every log line it emits
run_id_var: ContextVar[str | None] = ContextVar("run_id", default=None)
subcommand_var: ContextVar[str | None] = ContextVar("subcommand", default=None)


def bind_run_context(subcommand: str, run_id: str | None = None) -> str:
    """Set the run context for the current command.

    Args:
        subcommand: e.g. "rule audit"
        run_id: Explicit run id; a fresh UUID when omitted

    Returns:
        The run id in effect
    """
    run_id = run_id or str(uuid.uuid4())
    run_id_var.set(run_id)
    subcommand_var.set(subcommand)
    return run_id


def get_run_id() -> str | None:
    """Get current run ID from context.

    Returns:
        Run ID if set, None otherwise
    """
    return run_id_var.get()


def clear_run_context() -> None:
    """Clear the run context once a command completes."""
    run_id_var.set(None)
    subcommand_var.set(None)


def add_run_context_processor(
    _logger: Any, _method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    """Add run ID and subcommand to log event from context.

    Args:
        _logger: Logger instance (unused but required by structlog)
        _method_name: Method name (unused but required by structlog)
        event_dict: Event dictionary to process

    Returns:
        Event dictionary with run context added if available
    """
    run_id = get_run_id()
    if run_id:
        event_dict["run_id"] = run_id
    subcommand = subcommand_var.get()
    if subcommand:
        event_dict["subcommand"] = subcommand

    return event_dict
