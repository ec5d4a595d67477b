"""Evaluate Rule query and handler."""

from collections.abc import Sequence
from dataclasses import dataclass

from src.domain.exceptions.domain_exceptions import (
    BudgetExceededError,
    MalformedInputError,
)
from src.domain.services.rules import FbrRule, PfbrRule
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.coalition import MAX_VOTERS
from src.domain.value_objects.lottery import Lottery
from src.domain.value_objects.profile import TopProfile
from src.infrastructure.logging import bind_problem, get_logger
from src.infrastructure.serialization import BallotsFile

logger = get_logger(__name__)


def build_rule(document: BallotsFile, max_voters: int = MAX_VOTERS) -> PfbrRule | FbrRule:
    """Turn a ballots file into a validated rule.

    Raises:
        BudgetExceededError: If the file has more voters than allowed
        MalformedInputError: If a probability cannot be read
        InvalidBallotsError: If the table fails unanimity or monotonicity
    """
    if document.n > max_voters:
        raise BudgetExceededError(f"n={document.n} exceeds the voter cap of {max_voters}")
    try:
        if document.kind == "deterministic":
            return FbrRule(document.to_deterministic())
        return PfbrRule(document.to_probabilistic())
    except ValueError as e:
        raise MalformedInputError(str(e)) from e


@dataclass
class EvaluateRuleQuery:
    """Query to evaluate a ballot rule at one top profile."""

    ballots: BallotsFile
    tops: Sequence[int]


@dataclass
class EvaluateRuleResult:
    """The social lottery, plus the chosen alternative for deterministic ballots."""

    lottery: Lottery
    choice: Alternative | None = None


class EvaluateRuleHandler:
    """Handler for rule evaluation."""

    def __init__(self, max_voters: int = MAX_VOTERS) -> None:
        """Initialize handler.

        Args:
            max_voters: Largest accepted number of voters
        """
        self._max_voters = max_voters

    def handle(self, query: EvaluateRuleQuery) -> EvaluateRuleResult:
        """Handle the evaluate rule query.

        Raises:
            MalformedInputError: If the profile does not match the ballots
            InvalidBallotsError: If the ballots are not a valid rule
        """
        rule = build_rule(query.ballots, self._max_voters)
        if len(query.tops) != query.ballots.n:
            raise MalformedInputError(
                f"Expected {query.ballots.n} tops, got {len(query.tops)}"
            )
        tops = TopProfile(tuple(query.tops), query.ballots.m)
        if isinstance(rule, FbrRule):
            choice = rule.choose(tops)
            result = EvaluateRuleResult(Lottery.point_mass(choice, tops.m), choice)
        else:
            result = EvaluateRuleResult(rule.evaluate_tops(tops))
        logger.info(
            "Rule evaluated",
            tops=list(tops.tops),
            lottery=list(result.lottery.probs),
            **bind_problem(n=tops.n, m=tops.m),
        )
        return result
