"""Custom structlog processors for transforming log data."""

from fractions import Fraction
from typing import Any


def render_fractions(
    _logger: Any, _method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    """Render exact fractions as "p/q" strings.

    Args:
        _logger: Logger instance (unused but required by structlog)
        _method_name: Method name (unused but required by structlog)
        event_dict: Event dictionary to process

    Returns:
        Event dictionary with every Fraction rendered, including inside
        nested lists, tuples and dicts
    """
    return {key: _render(value) for key, value in event_dict.items()}


def _render(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {key: _render(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_render(item) for item in value]
    return value
