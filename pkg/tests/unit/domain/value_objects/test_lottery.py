"""Unit tests for Lottery value object and stochastic dominance."""

from fractions import Fraction

import pytest

from src.domain.exceptions.domain_exceptions import (
    BadWeightsError,
    EmptyCollectionError,
    InvalidLotteryError,
)
from src.domain.value_objects.lottery import (
    Lottery,
    first_dominance_failure,
    interval_mass,
    mix,
    stochastically_dominates,
)
from src.domain.value_objects.preference import Preference


pytestmark = pytest.mark.unit


class TestLottery:
    """Test suite for Lottery value object."""

    def test_parses_fraction_strings(self) -> None:
        """"p/q" strings become exact fractions."""
        lottery = Lottery.of(["1/2", "1/5", "1/10", "1/5"])
        assert lottery[1] == Fraction(1, 2)
        assert lottery.m == 4

    def test_rejects_negative_probability(self) -> None:
        """Negative entries are invalid."""
        with pytest.raises(InvalidLotteryError, match="Negative"):
            Lottery.of(["3/2", "-1/2", 0])

    def test_rejects_mass_not_one(self) -> None:
        """Entries must sum to exactly 1."""
        with pytest.raises(InvalidLotteryError, match="sum to"):
            Lottery.of(["1/3", "1/3", "1/4"])

    def test_point_mass(self) -> None:
        """e_a puts all mass on a."""
        assert Lottery.point_mass(2, 3).probs == (0, 1, 0)
        assert Lottery.point_mass(2, 3).support() == frozenset({2})

    def test_upper_and_lower_mass(self) -> None:
        """Tail masses over [a_k, a_m] and [a_1, a_k]."""
        lottery = Lottery.of(["1/2", "1/5", "1/10", "1/5"])
        assert lottery.upper_mass(3) == Fraction(3, 10)
        assert lottery.upper_mass(5) == 0
        assert lottery.lower_mass(2) == Fraction(7, 10)
        assert lottery.lower_mass(0) == 0
        assert interval_mass(lottery, 2, 3) == Fraction(3, 10)

    def test_to_strings(self) -> None:
        """Serialized form uses "p/q"."""
        assert Lottery.of(["1/2", "1/2", 0]).to_strings() == ["1/2", "1/2", "0"]

    def test_mix_is_convex_combination(self) -> None:
        """Half e_a1 plus half e_a3."""
        mixed = mix([(Fraction(1, 2), Lottery.point_mass(1, 3)), (Fraction(1, 2), Lottery.point_mass(3, 3))])
        assert mixed.probs == (Fraction(1, 2), 0, Fraction(1, 2))

    def test_mix_rejects_bad_weights(self) -> None:
        """Weights must be nonnegative and sum to 1."""
        e1 = Lottery.point_mass(1, 3)
        with pytest.raises(BadWeightsError):
            mix([(Fraction(1, 2), e1)])
        with pytest.raises(BadWeightsError):
            mix([(Fraction(3, 2), e1), (Fraction(-1, 2), e1)])
        with pytest.raises(EmptyCollectionError):
            mix([])


class TestStochasticDominance:
    """Test suite for first-order stochastic dominance."""

    def test_point_mass_on_top_dominates_everything(self) -> None:
        """e_top dominates any lottery under that preference."""
        p = Preference.of([4, 2, 3, 1])
        truthful = Lottery.of([0, "7/10", "1/5", "1/10"])
        assert stochastically_dominates(Lottery.point_mass(4, 4), truthful, p)

    def test_reports_first_failing_prefix(self) -> None:
        """Mass on a4 helps only the first prefix; e_a2 wins from the second on."""
        p = Preference.of([4, 2, 3, 1])
        truthful = Lottery.of([0, "7/10", "1/5", "1/10"])
        manipulated = Lottery.point_mass(2, 4)
        assert first_dominance_failure(truthful, manipulated, p) == 2
        assert first_dominance_failure(manipulated, truthful, p) == 1

    def test_dominance_is_reflexive(self) -> None:
        """Every lottery dominates itself."""
        lottery = Lottery.of(["1/3", "1/3", "1/3"])
        assert stochastically_dominates(lottery, lottery, Preference.identity(3))
