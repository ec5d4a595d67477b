"""Strict preference orders over a1..am."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from src.domain.exceptions.domain_exceptions import InvalidPreferenceError
from src.domain.value_objects.alternative import (
    Alternative,
    validate_alternative,
    validate_size,
)

type SwapPair = frozenset[Alternative]


@dataclass(frozen=True, order=True)
class Preference:
    """Immutable strict linear order; position 1 holds the peak.

    Attributes:
        order: Alternatives from best to worst, e.g. (2, 4, 3, 1) is (a2 a4 a3 a1)
    """

    order: tuple[Alternative, ...]
    _ranks: tuple[int, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        """Validate the order is a permutation of 1..m and cache ranks.

        Raises:
            InvalidPreferenceError: If order is not a bijection on 1..m
            DegenerateSizeError: If m < 3
        """
        m = len(self.order)
        validate_size(m)
        if sorted(self.order) != list(range(1, m + 1)):
            raise InvalidPreferenceError(
                f"Order {list(self.order)} is not a permutation of 1..{m}"
            )
        ranks = [0] * (m + 1)
        for position, alternative in enumerate(self.order, start=1):
            ranks[alternative] = position
        object.__setattr__(self, "_ranks", tuple(ranks))

    @classmethod
    def of(cls, order: Sequence[int]) -> "Preference":
        """Build a preference from any integer sequence."""
        return cls(tuple(order))

    @classmethod
    def identity(cls, m: int) -> "Preference":
        """The natural order (a1 a2 ... am)."""
        return cls(tuple(range(1, m + 1)))

    @property
    def m(self) -> int:
        """Number of alternatives."""
        return len(self.order)

    @property
    def top(self) -> Alternative:
        """The peak r1(P)."""
        return self.order[0]

    @property
    def second(self) -> Alternative:
        """The second-ranked alternative r2(P)."""
        return self.order[1]

    def ranked(self, k: int) -> Alternative:
        """Return r_k(P), the k-th ranked alternative."""
        return self.order[k - 1]

    def rank(self, a: Alternative) -> int:
        """Return k such that r_k(P) = a.

        Raises:
            InvalidIntervalError: If a is not one of a1..am
        """
        validate_alternative(a, self.m)
        return self._ranks[a]

    def prefers(self, a: Alternative, b: Alternative) -> bool:
        """True iff a is ranked strictly above b."""
        return self._ranks[a] < self._ranks[b]

    def reversed(self) -> "Preference":
        """The completely reversed order."""
        return Preference(self.order[::-1])

    def swap_at(self, position: int) -> "Preference":
        """Swap the alternatives at ranks position and position + 1."""
        order = list(self.order)
        order[position - 1], order[position] = order[position], order[position - 1]
        return Preference(tuple(order))

    def neighbours(self) -> Iterator["Preference"]:
        """Every order reachable by one contiguous swap."""
        for position in range(1, self.m):
            yield self.swap_at(position)

    def to_list(self) -> list[int]:
        """Serializable form."""
        return list(self.order)

    def __str__(self) -> str:
        return "(" + " ".join(f"a{a}" for a in self.order) + ")"


def rank(preference: Preference, a: Alternative) -> int:
    """Return the rank of a in the preference."""
    return preference.rank(a)


def adjacent(p: Preference, q: Preference) -> SwapPair | None:
    """Return the contiguous pair swapped between p and q, if they are adjacent.

    Two orders are adjacent when they differ by exactly one swap of
    alternatives in consecutive positions.

    Args:
        p: First preference
        q: Second preference

    Returns:
        The swapped pair {a_s, a_t}, or None when p and q are equal or differ
        in more than one contiguous swap
    """
    if p.m != q.m:
        return None
    differing = [k for k in range(p.m) if p.order[k] != q.order[k]]
    if len(differing) != 2:
        return None
    first, last = differing
    if last != first + 1:
        return None
    if p.order[first] != q.order[last] or p.order[last] != q.order[first]:
        return None
    return frozenset((p.order[first], p.order[last]))


def completely_reversed(p: Preference, q: Preference) -> bool:
    """True iff every pair is ranked oppositely by p and q."""
    return p.m == q.m and p.order == q.order[::-1]
