"""Generators for the preference-domain families.

Every generator filters all m! strict orders through a membership predicate,
so a generated domain is by construction exactly the set of orders passing
its predicate.
"""

from collections.abc import Callable, Sequence
from itertools import permutations

from src.domain.constants import MAX_GENERATOR_M
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    EmptyCollectionError,
    EnumerationOverflowError,
    InvalidPreferenceError,
    InvalidThresholdsError,
)
from src.domain.value_objects.alternative import (
    Alternative,
    validate_alternative,
    validate_size,
)
from src.domain.value_objects.preference import Preference


def validate_thresholds(m: int, k_lo: int, k_hi: int) -> None:
    """Check 1 <= k_lo < k_hi <= m.

    Raises:
        InvalidThresholdsError: If the pair is out of order or out of range
    """
    if not 1 <= k_lo < k_hi <= m:
        raise InvalidThresholdsError(
            f"Thresholds must satisfy 1 <= k_lo < k_hi <= m, got ({k_lo}, {k_hi}) with m={m}"
        )


def _declines_away_from_peak(
    preference: Preference, positions: Sequence[Alternative], peak_position: int
) -> bool:
    """True iff ranks worsen moving away from the peak along positions.

    positions lists alternatives in axis order; peak_position is where the
    peak sits on that axis (it may lie outside the listed stretch).
    """
    left = [a for i, a in enumerate(positions) if i < peak_position]
    right = [a for i, a in enumerate(positions) if i > peak_position]
    for side in (left[::-1], right):
        for closer, farther in zip(side, side[1:], strict=False):
            if not preference.prefers(closer, farther):
                return False
    return True


def is_single_peaked(preference: Preference, axis: Sequence[Alternative] | None = None) -> bool:
    """Single-peakedness w.r.t. an axis (natural order when omitted).

    a_s < a_t < peak or peak < a_t < a_s on the axis implies a_t P a_s.
    """
    order = tuple(axis) if axis is not None else tuple(range(1, preference.m + 1))
    peak_position = order.index(preference.top)
    return _declines_away_from_peak(preference, order, peak_position)


def is_hybrid(preference: Preference, k_lo: int, k_hi: int) -> bool:
    """Membership in the (k_lo, k_hi)-hybrid domain.

    Single-peakedness is required for pairs inside L = [a1, a_k_lo] and inside
    R = [a_k_hi, am]. A peak in L must rank a_k_lo above the rest of M; a peak
    in R must rank a_k_hi above the rest of M.
    """
    m = preference.m
    peak = preference.top
    left = tuple(range(1, k_lo + 1))
    right = tuple(range(k_hi, m + 1))
    # the peak's position relative to each stretch, possibly outside it
    if not _declines_away_from_peak(preference, left, peak - 1):
        return False
    if not _declines_away_from_peak(preference, right, peak - k_hi):
        return False
    if peak <= k_lo:
        return all(preference.prefers(k_lo, a) for a in range(k_lo + 1, k_hi + 1))
    if peak >= k_hi:
        return all(preference.prefers(k_hi, a) for a in range(k_lo, k_hi))
    return True


def is_semi_single_peaked(preference: Preference, threshold: Alternative) -> bool:
    """Semi-single-peakedness with respect to a threshold alternative.

    Ranks worsen moving from the peak towards the threshold, and every
    alternative beyond the threshold (away from the peak) ranks below it.
    """
    peak = preference.top
    if peak <= threshold:
        stretch = range(peak, threshold + 1)
        beyond = range(threshold + 1, preference.m + 1)
    else:
        stretch = range(peak, threshold - 1, -1)
        beyond = range(1, threshold)
    for closer, farther in zip(stretch, stretch[1:], strict=False):
        if not preference.prefers(closer, farther):
            return False
    return all(preference.prefers(threshold, a) for a in beyond)


def _generate(m: int, predicate: Callable[[Preference], bool], family: str) -> Domain:
    validate_size(m)
    if m > MAX_GENERATOR_M:
        raise EnumerationOverflowError(
            f"Generators enumerate m! orders and support m <= {MAX_GENERATOR_M}, got m={m}"
        )
    members = [p for p in map(Preference, permutations(range(1, m + 1))) if predicate(p)]
    if not members:
        raise EmptyCollectionError(f"No preference over {m} alternatives is {family}")
    return Domain(m, tuple(members))


def gen_complete(m: int) -> Domain:
    """All m! strict orders.

    Raises:
        DegenerateSizeError: If m < 3
        EnumerationOverflowError: If m exceeds the generator cap
    """
    return _generate(m, lambda _: True, "complete")


def gen_single_peaked(m: int) -> Domain:
    """The single-peaked domain w.r.t. the natural order."""
    return _generate(m, is_single_peaked, "single-peaked")


def gen_hybrid(m: int, k_lo: int, k_hi: int) -> Domain:
    """The full (k_lo, k_hi)-hybrid domain.

    Raises:
        InvalidThresholdsError: If not 1 <= k_lo < k_hi <= m
    """
    validate_size(m)
    validate_thresholds(m, k_lo, k_hi)
    return _generate(m, lambda p: is_hybrid(p, k_lo, k_hi), "hybrid")


def gen_multiple_single_peaked(orders: Sequence[Sequence[Alternative]]) -> Domain:
    """Union of the single-peaked domains w.r.t. each axis in orders.

    Raises:
        EmptyCollectionError: If orders is empty
        InvalidPreferenceError: If the axes are not permutations over a common m
    """
    if not orders:
        raise EmptyCollectionError("At least one axis is required")
    axes = [Preference.of(order).order for order in orders]
    m = len(axes[0])
    if any(len(axis) != m for axis in axes):
        raise InvalidPreferenceError("Every axis must order the same alternatives")
    return _generate(
        m,
        lambda p: any(is_single_peaked(p, axis) for axis in axes),
        "multiple-single-peaked",
    )


def gen_semi_single_peaked(m: int, threshold: Alternative) -> Domain:
    """The semi-single-peaked domain with the given threshold."""
    validate_size(m)
    validate_alternative(threshold, m)
    return _generate(
        m, lambda p: is_semi_single_peaked(p, threshold), "semi-single-peaked"
    )
