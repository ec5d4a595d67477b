"""Alternatives a1..am, identified by their 1-based index.

The natural order is index order and is never stored separately.
"""

from src.domain.exceptions.domain_exceptions import (
    DegenerateSizeError,
    InvalidIntervalError,
)

type Alternative = int

MIN_ALTERNATIVES = 3


def validate_size(m: int) -> None:
    """Reject alternative sets too small for the theory.

    Args:
        m: Number of alternatives

    Raises:
        DegenerateSizeError: If m < 3
    """
    if m < MIN_ALTERNATIVES:
        raise DegenerateSizeError(
            f"At least {MIN_ALTERNATIVES} alternatives are required, got m={m}"
        )


def validate_alternative(a: Alternative, m: int) -> None:
    """Check that a names one of a1..am.

    Raises:
        InvalidIntervalError: If a is outside 1..m
    """
    if not 1 <= a <= m:
        raise InvalidIntervalError(f"Alternative a{a} is outside a1..a{m}")


def interval(lo: Alternative, hi: Alternative, m: int) -> range:
    """Return the alternatives in [lo, hi] in natural order.

    Raises:
        InvalidIntervalError: If lo > hi or an endpoint is out of range
    """
    validate_alternative(lo, m)
    validate_alternative(hi, m)
    if lo > hi:
        raise InvalidIntervalError(f"Empty interval [a{lo}, a{hi}]")
    return range(lo, hi + 1)


def label(a: Alternative) -> str:
    """Render an alternative as it appears in reports."""
    return f"a{a}"
