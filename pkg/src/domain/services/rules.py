"""Rule objects shared by evaluation and audits.

A rule maps a preference profile to a lottery. Tops-only rules also
evaluate bare top profiles, which lets audits scan m^n top profiles
instead of |D|^n full profiles. Every concrete rule is a frozen dataclass
so it pickles into audit worker processes.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from src.domain.entities.preference_domain import Domain
from src.domain.services.ballot_checks import require_valid_ballots
from src.domain.services.rule_evaluation import (
    eval_fbr,
    eval_pfbr,
    eval_random_dictatorship,
    validate_coefficients,
)
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery
from src.domain.value_objects.profile import Profile, TopProfile


class Rule(ABC):
    """A random social choice function over strict preferences."""

    tops_only: ClassVar[bool] = False

    @property
    def name(self) -> str:
        """Short label used in reports."""
        return type(self).__name__

    @abstractmethod
    def evaluate(self, profile: Profile) -> Lottery:
        """The social lottery at a full profile."""


class TopsOnlyRule(Rule):
    """A rule whose lottery depends only on the voters' peaks."""

    tops_only: ClassVar[bool] = True

    @abstractmethod
    def evaluate_tops(self, tops: TopProfile) -> Lottery:
        """The social lottery at a top profile."""

    def evaluate(self, profile: Profile) -> Lottery:
        return self.evaluate_tops(profile.tops())


@dataclass(frozen=True)
class PfbrRule(TopsOnlyRule):
    """The probabilistic fixed ballot rule of a validated ballot table."""

    ballots: ProbabilisticBallots

    def __post_init__(self) -> None:
        """Reject tables failing ballot unanimity or monotonicity."""
        require_valid_ballots(self.ballots)

    def evaluate_tops(self, tops: TopProfile) -> Lottery:
        return eval_pfbr(self.ballots, tops)


@dataclass(frozen=True)
class FbrRule(TopsOnlyRule):
    """A fixed ballot rule viewed as a degenerate random rule."""

    ballots: DeterministicBallots

    def __post_init__(self) -> None:
        """Reject tables failing ballot unanimity or monotonicity."""
        require_valid_ballots(self.ballots)

    def choose(self, tops: TopProfile) -> Alternative:
        """The selected alternative."""
        return eval_fbr(self.ballots, tops)

    def evaluate_tops(self, tops: TopProfile) -> Lottery:
        return Lottery.point_mass(self.choose(tops), self.ballots.m)


@dataclass(frozen=True)
class RandomDictatorshipRule(TopsOnlyRule):
    """Voter i's peak is chosen with probability epsilon_i."""

    epsilon: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", validate_coefficients(self.epsilon))

    def evaluate_tops(self, tops: TopProfile) -> Lottery:
        return eval_random_dictatorship(self.epsilon, tops)


@dataclass(frozen=True)
class TopsOnlyView(TopsOnlyRule):
    """A full-profile rule already known to be tops-only, evaluated at top profiles.

    Each top is expanded to the first domain preference with that peak.
    """

    rule: Rule
    domain: Domain

    @property
    def name(self) -> str:
        return self.rule.name

    def evaluate_tops(self, tops: TopProfile) -> Lottery:
        profile = Profile(tuple(self.domain.with_top(top)[0] for top in tops.tops))
        return self.rule.evaluate(profile)

    def evaluate(self, profile: Profile) -> Lottery:
        return self.rule.evaluate(profile)
