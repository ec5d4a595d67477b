"""Pytest configuration and shared fixtures."""

import os
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path

import pytest

# Set test environment variables BEFORE importing any app modules
os.environ["BALLOTCRAFT_ENVIRONMENT"] = "test"
os.environ.setdefault("BALLOTCRAFT_LOG_LEVEL", "warning")

from src.domain.entities.preference_domain import Domain
from src.domain.services.domain_generators import gen_hybrid, gen_multiple_single_peaked
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery
from src.infrastructure.config import get_settings

EXAMPLES_DIR = Path(__file__).resolve().parent.parent / "config" / "examples"


@pytest.fixture(autouse=True)
def clear_settings_cache() -> Iterator[None]:
    """Drop cached settings so env changes in one test do not leak."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def examples_dir() -> Path:
    """Directory holding the example ballot files."""
    return EXAMPLES_DIR


@pytest.fixture
def two_voter_ballots() -> ProbabilisticBallots:
    """Monotone two-voter ballots over four alternatives without the CRD condition."""
    return ProbabilisticBallots.from_mapping(
        2,
        4,
        {
            0: Lottery.of([1, 0, 0, 0]),
            1: Lottery.of(["1/2", "1/5", "1/10", "1/5"]),
            2: Lottery.of(["2/5", "3/10", "1/5", "1/10"]),
            3: Lottery.of([0, 0, 0, 1]),
        },
    )


@pytest.fixture
def per_capita_failing_ballots() -> ProbabilisticBallots:
    """Anonymous (2,4)-constrained ballots over five alternatives that fail per-capita monotonicity."""
    third = Fraction(1, 3)
    return ProbabilisticBallots.from_sizes(
        3,
        [
            Lottery.point_mass(1, 5),
            Lottery((third, third, 0, 0, third)),
            Lottery((third, 0, 0, third, third)),
            Lottery.point_mass(5, 5),
        ],
    )


@pytest.fixture
def decomposable_ballots() -> ProbabilisticBallots:
    """Anonymous (2,4)-constrained ballots that decompose in two rounds."""
    return ProbabilisticBallots.from_sizes(
        3,
        [
            Lottery.point_mass(1, 5),
            Lottery.of(["1/3", "1/3", 0, "1/6", "1/6"]),
            Lottery.of(["1/6", "1/6", 0, "1/3", "1/3"]),
            Lottery.point_mass(5, 5),
        ],
    )


@pytest.fixture
def three_round_ballots() -> ProbabilisticBallots:
    """Anonymous (2,4)-constrained ballots that decompose in three rounds."""
    return ProbabilisticBallots.from_sizes(
        3,
        [
            Lottery.point_mass(1, 5),
            Lottery.of(["1/6", "1/2", 0, "1/6", "1/6"]),
            Lottery.of(["1/12", "1/4", 0, "1/3", "1/3"]),
            Lottery.point_mass(5, 5),
        ],
    )


@pytest.fixture
def median_ballots() -> DeterministicBallots:
    """Three-voter median rule: a1 below two members, a5 from two members up."""
    return DeterministicBallots(3, 5, (1, 1, 1, 5, 1, 5, 5, 5))


@pytest.fixture
def hybrid_5_2_4() -> Domain:
    """The (2,4)-hybrid domain over five alternatives."""
    return gen_hybrid(5, 2, 4)


@pytest.fixture
def hybrid_4_2_4() -> Domain:
    """The (2,4)-hybrid domain over four alternatives."""
    return gen_hybrid(4, 2, 4)


@pytest.fixture
def two_axis_domain() -> Domain:
    """Single-peaked on a1..a6 or on the axis with a3 and a4 swapped."""
    return gen_multiple_single_peaked([[1, 2, 3, 4, 5, 6], [1, 2, 4, 3, 5, 6]])
