"""Exact-rational lotteries over a1..am and stochastic dominance."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.domain.exceptions.domain_exceptions import (
    BadWeightsError,
    EmptyCollectionError,
    InvalidLotteryError,
)
from src.domain.value_objects.alternative import Alternative, interval
from src.domain.value_objects.preference import Preference

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Lottery:
    """Immutable probability vector over a1..am.

    Attributes:
        probs: Probability of a_k at position k - 1; entries are nonnegative
            and sum to exactly 1
    """

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Coerce entries to Fraction and validate the distribution.

        Raises:
            InvalidLotteryError: If an entry is negative or the sum is not 1
        """
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise InvalidLotteryError("A lottery needs at least one alternative")
        if any(p < 0 for p in probs):
            raise InvalidLotteryError(
                f"Negative probability in {[str(p) for p in probs]}"
            )
        if sum(probs) != ONE:
            raise InvalidLotteryError(
                f"Probabilities sum to {sum(probs)}, expected exactly 1"
            )

    @classmethod
    def point_mass(cls, a: Alternative, m: int) -> "Lottery":
        """The degenerate lottery e_a."""
        return cls(tuple(ONE if k == a else ZERO for k in range(1, m + 1)))

    @classmethod
    def of(cls, probs: Sequence[Fraction | int | str]) -> "Lottery":
        """Build a lottery from fractions, integers or "p/q" strings."""
        return cls(tuple(Fraction(p) for p in probs))

    @property
    def m(self) -> int:
        """Number of alternatives."""
        return len(self.probs)

    def __getitem__(self, a: Alternative) -> Fraction:
        """Probability of alternative a (1-based)."""
        return self.probs[a - 1]

    def upper_mass(self, k: int) -> Fraction:
        """Mass of [a_k, a_m]; zero for k = m + 1."""
        return sum(self.probs[k - 1 :], ZERO)

    def lower_mass(self, k: int) -> Fraction:
        """Mass of [a_1, a_k]; zero for k = 0."""
        return sum(self.probs[:k], ZERO)

    def support(self) -> frozenset[Alternative]:
        """Alternatives with positive probability."""
        return frozenset(k for k, p in enumerate(self.probs, start=1) if p > 0)

    def to_strings(self) -> list[str]:
        """Serializable form with "p/q" strings."""
        return [str(p) for p in self.probs]


def interval_mass(lottery: Lottery, lo: Alternative, hi: Alternative) -> Fraction:
    """Return the probability of the interval [lo, hi].

    Raises:
        InvalidIntervalError: If lo > hi or an endpoint is out of range
    """
    return sum((lottery[k] for k in interval(lo, hi, lottery.m)), ZERO)


def mix(pairs: Iterable[tuple[Fraction, Lottery]]) -> Lottery:
    """Return the convex combination of weighted lotteries.

    Args:
        pairs: (weight, lottery) pairs; weights nonnegative and summing to 1

    Returns:
        The pointwise mixture

    Raises:
        EmptyCollectionError: If no pairs are given
        BadWeightsError: If a weight is negative or the weights do not sum to 1
    """
    items = list(pairs)
    if not items:
        raise EmptyCollectionError("Cannot mix an empty list of lotteries")
    weights = [Fraction(w) for w, _ in items]
    if any(w < 0 for w in weights):
        raise BadWeightsError(f"Negative weight in {[str(w) for w in weights]}")
    if sum(weights) != ONE:
        raise BadWeightsError(f"Weights sum to {sum(weights)}, expected exactly 1")
    m = items[0][1].m
    probs = [ZERO] * m
    for weight, (_, lottery) in zip(weights, items, strict=True):
        for k, p in enumerate(lottery.probs):
            probs[k] += weight * p
    return Lottery(tuple(probs))


def first_dominance_failure(
    lam: Lottery, mu: Lottery, preference: Preference
) -> int | None:
    """Return the first prefix length at which lam fails to dominate mu.

    Prefixes follow the preference from the peak down. The scan stops at the
    first violated prefix.
    """
    lam_sum = ZERO
    mu_sum = ZERO
    for k, a in enumerate(preference.order, start=1):
        lam_sum += lam.probs[a - 1]
        mu_sum += mu.probs[a - 1]
        if lam_sum < mu_sum:
            return k
    return None


def stochastically_dominates(lam: Lottery, mu: Lottery, preference: Preference) -> bool:
    """True iff lam puts at least as much mass as mu on every upper contour set."""
    return first_dominance_failure(lam, mu, preference) is None
