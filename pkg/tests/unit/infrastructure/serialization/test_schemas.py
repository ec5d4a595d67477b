"""Tests for domain and ballot file schemas."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.domain.services.domain_generators import gen_single_peaked
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery
from src.infrastructure.serialization import BallotsFile, DomainFile, parse_fraction


pytestmark = pytest.mark.unit


class TestParseFraction:
    """Test exact probability parsing."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            ("1/3", Fraction(1, 3)),
            (" 2/4 ", Fraction(1, 2)),
            ("0.25", Fraction(1, 4)),
            (1, Fraction(1)),
            (0.1, Fraction(1, 10)),
        ],
    )
    def test_reads_exact_values(self, value: str | int | float, expected: Fraction) -> None:
        """Strings, integers and floats are read exactly."""
        assert parse_fraction(value) == expected

    @pytest.mark.parametrize("value", ["abc", "1/0", True])
    def test_rejects_non_numbers(self, value: object) -> None:
        """Non-numeric values and booleans are rejected."""
        with pytest.raises(ValueError):
            parse_fraction(value)  # type: ignore[arg-type]


class TestDomainFile:
    """Test the domain file schema."""

    def test_builds_domain(self) -> None:
        """Orders become a canonical domain."""
        # Arrange
        document = DomainFile(m=3, prefs=[[3, 2, 1], [1, 2, 3], [1, 2, 3]])

        # Act
        domain = document.to_domain()

        # Assert - duplicates collapse
        assert len(domain) == 2
        assert domain.to_lists() == [[1, 2, 3], [3, 2, 1]]

    def test_rejects_incomplete_order(self) -> None:
        """Each order must rank every alternative once."""
        with pytest.raises(ValidationError, match="not a strict order"):
            DomainFile(m=3, prefs=[[1, 2]])

    def test_from_domain_keeps_family(self) -> None:
        """Generated domains remember their family."""
        # Arrange
        domain = gen_single_peaked(4)

        # Act
        document = DomainFile.from_domain(domain, "sp")

        # Assert
        assert document.m == 4
        assert document.family == "sp"
        assert len(document.prefs) == 8
        assert document.to_domain() == domain


class TestBallotsFile:
    """Test the ballots file schema."""

    def test_reads_anonymous_lotteries(self) -> None:
        """Size-keyed files expand to every coalition."""
        # Arrange
        document = BallotsFile(
            n=2,
            m=3,
            anonymous=True,
            ballots={"0": ["1", 0, 0], "1": ["1/2", "0", "0.5"], "2": [0, 0, 1]},
        )

        # Act
        ballots = document.to_probabilistic()

        # Assert
        assert ballots[0b01] == ballots[0b10] == Lottery.of(["1/2", 0, "1/2"])
        assert ballots[0b11] == Lottery.point_mass(3, 3)

    def test_deterministic_files_become_point_masses(self) -> None:
        """A deterministic table is read as degenerate lotteries too."""
        # Arrange
        document = BallotsFile(
            n=2, m=3, kind="deterministic", ballots={"0": 1, "1": 2, "2": 2, "3": 3}
        )

        # Act
        deterministic = document.to_deterministic()
        probabilistic = document.to_probabilistic()

        # Assert
        assert deterministic == DeterministicBallots(2, 3, (1, 2, 2, 3))
        assert probabilistic[0b01] == Lottery.point_mass(2, 3)

    def test_to_deterministic_rejects_lotteries(self) -> None:
        """Lottery files have no deterministic reading."""
        document = BallotsFile(
            n=2,
            m=3,
            ballots={"0": [1, 0, 0], "1": [1, 0, 0], "2": [0, 0, 1], "3": [0, 0, 1]},
        )

        with pytest.raises(ValueError, match="lotteries"):
            document.to_deterministic()

    @pytest.mark.parametrize(
        ("payload", "message"),
        [
            ({"n": 2, "m": 3, "ballots": {"x": [1, 0, 0]}}, "not a coalition"),
            ({"n": 2, "m": 3, "ballots": {"0": [1, 0, 0]}}, "Expected ballot keys"),
            (
                {"n": 2, "m": 3, "anonymous": True, "ballots": {"0": 1, "1": 1, "2": 3}},
                "must be a list",
            ),
            (
                {
                    "n": 2,
                    "m": 3,
                    "kind": "deterministic",
                    "anonymous": True,
                    "ballots": {"0": 1, "1": [1, 0, 0], "2": 3},
                },
                "must be one alternative",
            ),
            (
                {
                    "n": 2,
                    "m": 4,
                    "anonymous": True,
                    "ballots": {"0": [1, 0, 0], "1": [0, 1, 0], "2": [0, 0, 1]},
                },
                "declares m=4",
            ),
            (
                {
                    "n": 2,
                    "m": 3,
                    "ballots": {
                        "0": [1, 0, 0],
                        "1": [1, 0, 0, 0],
                        "2": [0, 0, 1],
                        "3": [0, 0, 1],
                    },
                },
                "declares m=3",
            ),
            (
                {
                    "n": 2,
                    "m": 3,
                    "kind": "deterministic",
                    "ballots": {"0": 1, "1": 4, "2": 2, "3": 3},
                },
                "outside a1..a3",
            ),
        ],
    )
    def test_rejects_malformed_tables(self, payload: dict[str, object], message: str) -> None:
        """Keys and values must match n, anonymity and kind."""
        with pytest.raises(ValidationError, match=message):
            BallotsFile.model_validate(payload)

    def test_writes_probabilistic_tables(self, two_voter_ballots: ProbabilisticBallots) -> None:
        """Tables are written with p/q strings under bitmask keys."""
        # Act
        document = BallotsFile.from_probabilistic(two_voter_ballots, thresholds=(2, 4))

        # Assert
        assert document.ballots["1"] == ["1/2", "1/5", "1/10", "1/5"]
        assert document.thresholds == (2, 4)
        assert document.to_probabilistic() == two_voter_ballots

    def test_writes_deterministic_tables(self, median_ballots: DeterministicBallots) -> None:
        """Deterministic tables keep one alternative per coalition."""
        document = BallotsFile.from_deterministic(median_ballots)

        assert document.kind == "deterministic"
        assert document.ballots["3"] == 5
        assert document.to_deterministic() == median_ballots
