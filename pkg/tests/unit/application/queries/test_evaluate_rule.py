"""Unit tests for Evaluate Rule query handler."""

from fractions import Fraction
from pathlib import Path

import pytest

from src.application.queries.evaluate_rule import (
    EvaluateRuleHandler,
    EvaluateRuleQuery,
    build_rule,
)
from src.domain.exceptions.domain_exceptions import (
    BudgetExceededError,
    InvalidBallotsError,
    MalformedInputError,
)
from src.domain.services.rules import FbrRule, PfbrRule
from src.infrastructure.serialization import BallotsFile, load_ballots


pytestmark = pytest.mark.unit


class TestBuildRule:
    """Test rule construction from ballots files."""

    def test_builds_pfbr_and_fbr(self, examples_dir: Path) -> None:
        """The file kind picks the rule."""
        assert isinstance(build_rule(load_ballots(examples_dir / "two_voter_ballots.json")), PfbrRule)
        assert isinstance(
            build_rule(load_ballots(examples_dir / "median_fbr_ballots.json")), FbrRule
        )

    def test_rejects_non_monotone_ballots(self) -> None:
        """Tables that are not monotone do not define a rule."""
        # Arrange - the empty coalition must elect a1
        document = BallotsFile(
            n=2, m=3, kind="deterministic", ballots={"0": 2, "1": 2, "2": 2, "3": 3}
        )

        # Act & Assert
        with pytest.raises(InvalidBallotsError):
            build_rule(document)

    def test_rejects_unreadable_probability(self) -> None:
        """Probabilities that are not numbers are malformed input."""
        document = BallotsFile(
            n=2,
            m=3,
            ballots={"0": [1, 0, 0], "1": ["x", 0, 0], "2": [1, 0, 0], "3": [0, 0, 1]},
        )

        with pytest.raises(MalformedInputError):
            build_rule(document)


class TestEvaluateRuleHandler:
    """Test suite for EvaluateRuleHandler."""

    def test_evaluates_probabilistic_ballots(self, examples_dir: Path) -> None:
        """The social lottery at (2,4) for the two-voter table."""
        # Arrange
        query = EvaluateRuleQuery(load_ballots(examples_dir / "two_voter_ballots.json"), (2, 4))

        # Act
        result = EvaluateRuleHandler().handle(query)

        # Assert
        assert result.lottery.probs == (0, Fraction(7, 10), Fraction(1, 5), Fraction(1, 10))
        assert result.choice is None

    @pytest.mark.parametrize(
        ("tops", "expected"),
        [((2, 4, 4), 4), ((1, 3, 5), 3), ((5, 1, 2), 2), ((5, 5, 1), 5)],
    )
    def test_evaluates_median_rule(
        self, examples_dir: Path, tops: tuple[int, ...], expected: int
    ) -> None:
        """Deterministic ballots choose the median peak."""
        query = EvaluateRuleQuery(load_ballots(examples_dir / "median_fbr_ballots.json"), tops)

        result = EvaluateRuleHandler().handle(query)

        assert result.choice == expected
        assert result.lottery[expected] == 1

    def test_rejects_wrong_profile_length(self, examples_dir: Path) -> None:
        """One top per voter is required."""
        query = EvaluateRuleQuery(load_ballots(examples_dir / "two_voter_ballots.json"), (2,))

        with pytest.raises(MalformedInputError, match="Expected 2 tops"):
            EvaluateRuleHandler().handle(query)

    def test_enforces_voter_cap(self, examples_dir: Path) -> None:
        """Files over the voter cap are refused."""
        query = EvaluateRuleQuery(
            load_ballots(examples_dir / "median_fbr_ballots.json"), (1, 2, 3)
        )

        with pytest.raises(BudgetExceededError, match="voter cap"):
            EvaluateRuleHandler(max_voters=2).handle(query)
