"""Preference profiles and their tops-only reduction."""

from collections.abc import Sequence
from dataclasses import dataclass

from src.domain.exceptions.domain_exceptions import (
    DegenerateSizeError,
    InvalidPreferenceError,
)
from src.domain.value_objects.alternative import Alternative, validate_alternative
from src.domain.value_objects.preference import Preference

MIN_VOTERS = 2


def validate_voters(n: int) -> None:
    """Reject electorates with fewer than two voters.

    Raises:
        DegenerateSizeError: If n < 2
    """
    if n < MIN_VOTERS:
        raise DegenerateSizeError(f"At least {MIN_VOTERS} voters are required, got n={n}")


@dataclass(frozen=True, order=True)
class TopProfile:
    """The peaks of an n-voter profile, voter 1 first.

    Attributes:
        tops: r1(P_i) for i = 1..n
        m: Number of alternatives
    """

    tops: tuple[Alternative, ...]
    m: int

    def __post_init__(self) -> None:
        """Validate voter count and alternative range."""
        validate_voters(len(self.tops))
        for a in self.tops:
            validate_alternative(a, self.m)

    @classmethod
    def of(cls, tops: Sequence[int], m: int) -> "TopProfile":
        """Build a top profile from any integer sequence."""
        return cls(tuple(tops), m)

    @property
    def n(self) -> int:
        """Number of voters."""
        return len(self.tops)

    def top(self, voter: int) -> Alternative:
        """Peak of a voter (1-based)."""
        return self.tops[voter - 1]

    def with_top(self, voter: int, a: Alternative) -> "TopProfile":
        """Replace one voter's peak, written (a, P_-i)."""
        tops = list(self.tops)
        tops[voter - 1] = a
        return TopProfile(tuple(tops), self.m)

    def permuted(self, permutation: Sequence[int]) -> "TopProfile":
        """Reorder voters: position i receives the peak of voter permutation[i]."""
        return TopProfile(tuple(self.tops[j - 1] for j in permutation), self.m)


@dataclass(frozen=True, order=True)
class Profile:
    """An n-tuple of preferences over a common set of alternatives.

    Attributes:
        prefs: P_i for i = 1..n
    """

    prefs: tuple[Preference, ...]

    def __post_init__(self) -> None:
        """Validate voter count and a common m."""
        validate_voters(len(self.prefs))
        if len({p.m for p in self.prefs}) != 1:
            raise InvalidPreferenceError("All preferences in a profile must share m")

    @property
    def n(self) -> int:
        """Number of voters."""
        return len(self.prefs)

    @property
    def m(self) -> int:
        """Number of alternatives."""
        return self.prefs[0].m

    def tops(self) -> TopProfile:
        """The tops-only reduction."""
        return TopProfile(tuple(p.top for p in self.prefs), self.m)

    def preference(self, voter: int) -> Preference:
        """Preference of a voter (1-based)."""
        return self.prefs[voter - 1]

    def with_preference(self, voter: int, preference: Preference) -> "Profile":
        """Replace one voter's preference, written (P'_i, P_-i)."""
        prefs = list(self.prefs)
        prefs[voter - 1] = preference
        return Profile(tuple(prefs))

    def permuted(self, permutation: Sequence[int]) -> "Profile":
        """Reorder voters: position i receives the preference of voter permutation[i]."""
        return Profile(tuple(self.prefs[j - 1] for j in permutation))
