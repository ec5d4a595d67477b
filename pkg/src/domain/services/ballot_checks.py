"""Validity conditions on coalition ballot tables.

Ballot unanimity and monotonicity make a ballot table a rule at all; the
constrained random-dictatorship and per-capita conditions single out the
tables that are strategy-proof on a hybrid domain and decomposable.
"""

import weakref
from dataclasses import dataclass
from fractions import Fraction

from src.domain.exceptions.domain_exceptions import (
    InternalInconsistencyError,
    InvalidBallotsError,
    InvalidThresholdsError,
    RequiresAnonymityError,
)
from src.domain.services.domain_generators import validate_thresholds
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.coalition import Coalition
from src.domain.value_objects.lottery import ZERO, Lottery

type Ballots = ProbabilisticBallots | DeterministicBallots


def _lotteries(ballots: Ballots) -> ProbabilisticBallots:
    if isinstance(ballots, DeterministicBallots):
        return ballots.as_lotteries
    return ballots


def check_ballot_unanimity(ballots: Ballots) -> bool:
    """True iff the empty coalition votes for a1 and the grand coalition for am."""
    table = _lotteries(ballots)
    return table[coalitions.EMPTY] == Lottery.point_mass(1, table.m) and table[
        coalitions.grand(table.n)
    ] == Lottery.point_mass(table.m, table.m)


@dataclass(frozen=True)
class MonotonicityViolation:
    """A cover S within T = S + {i} where T puts less mass on [a_k, am].

    Attributes:
        smaller: The coalition S
        larger: The coalition T
        k: Index of the interval [a_k, am] that loses mass
    """

    smaller: Coalition
    larger: Coalition
    k: Alternative


@dataclass(frozen=True)
class MonotonicityResult:
    """Outcome of the monotonicity check with its smallest witness."""

    holds: bool
    violation: MonotonicityViolation | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_monotonicity(ballots: Ballots) -> MonotonicityResult:
    """Check that upper-interval mass grows along coalition inclusion.

    Only covers T = S + {i} are scanned; the inequality is transitive along
    chains of covers. The reported witness is the smallest (S, T, k).
    """
    table = _lotteries(ballots)
    tails = table.upper_masses
    for s in coalitions.all_coalitions(table.n):
        for _, t in coalitions.covers(s, table.n):
            for k in range(2, table.m + 1):
                if tails[s][k] > tails[t][k]:
                    return MonotonicityResult(False, MonotonicityViolation(s, t, k))
    return MonotonicityResult(True)


_validated: weakref.WeakValueDictionary[int, ProbabilisticBallots] = (
    weakref.WeakValueDictionary()
)


def require_valid_ballots(ballots: Ballots) -> ProbabilisticBallots:
    """Validate ballot unanimity and monotonicity once per table.

    Returns:
        The (probabilistic view of the) validated table

    Raises:
        InvalidBallotsError: Naming the violated condition
    """
    table = _lotteries(ballots)
    if _validated.get(id(table)) is table:
        return table
    if not check_ballot_unanimity(table):
        raise InvalidBallotsError(
            f"Ballot unanimity fails: the empty coalition must vote e_a1 and "
            f"the grand coalition e_a{table.m}"
        )
    result = check_monotonicity(table)
    if not result:
        assert result.violation is not None
        violation = result.violation
        raise InvalidBallotsError(
            f"Monotonicity fails: coalition {coalitions.render(violation.larger, table.n)} "
            f"puts less mass on [a{violation.k}, a{table.m}] than "
            f"{coalitions.render(violation.smaller, table.n)}"
        )
    _validated[id(table)] = table
    return table


def check_crd(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> tuple[Fraction, ...] | None:
    """Find the conditional dictatorial coefficients of a ballot table.

    epsilon_i is read off the singleton ballot beta_{i}([a_k_hi, am]); the
    condition holds when every coalition puts the sum of its members'
    coefficients on R and the rest on L, the coefficients summing to 1.

    Returns:
        The coefficients, or None when the condition fails

    Raises:
        InvalidThresholdsError: If the thresholds are invalid or adjacent
        InternalInconsistencyError: If the middle interval keeps mass anyway
    """
    m, n = ballots.m, ballots.n
    validate_thresholds(m, k_lo, k_hi)
    if k_hi - k_lo <= 1:
        raise InvalidThresholdsError(
            f"The middle interval of ({k_lo}, {k_hi}) has no interior alternative"
        )
    epsilon = tuple(ballots.upper_mass(coalitions.of([i]), k_hi) for i in range(1, n + 1))
    if sum(epsilon) != 1:
        return None
    for s in coalitions.all_coalitions(n):
        inside = sum((epsilon[i - 1] for i in coalitions.members(s, n)), ZERO)
        if ballots.upper_mass(s, k_hi) != inside or ballots.lower_mass(s, k_lo) != 1 - inside:
            return None
    for s in coalitions.all_coalitions(n):
        if any(ballots[s][k] for k in range(k_lo + 1, k_hi)):
            raise InternalInconsistencyError(
                f"Coalition {coalitions.render(s, n)} keeps mass strictly inside "
                f"(a{k_lo}, a{k_hi}) although the coefficients add up"
            )
    return epsilon


def check_anonymous_ballots(ballots: ProbabilisticBallots) -> bool:
    """True iff every nonempty coalition votes the ballot of its size class."""
    return all(
        ballots[s] == ballots.of_size(coalitions.size(s))
        for s in coalitions.all_coalitions(ballots.n)
        if s
    )


@dataclass(frozen=True)
class PerCapitaWitness:
    """The first failing per-capita inequality.

    For side "right" the ballots compared are those of S and S'; for side
    "left" they are those of the complements N - S and N - S'. In both cases
    the per-member mass of the larger coalition falls short.

    Attributes:
        smaller: S
        larger: S', a strict superset of S
        side: "right" or "left"
        alternative: a_t in R (right) or a_s in L (left)
        larger_per_capita: The mass per member attached to S'
        smaller_per_capita: The mass per member attached to S
    """

    smaller: Coalition
    larger: Coalition
    side: str
    alternative: Alternative
    larger_per_capita: Fraction
    smaller_per_capita: Fraction


@dataclass(frozen=True)
class PerCapitaResult:
    """Outcome of the per-capita monotonicity check."""

    holds: bool
    witness: PerCapitaWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_per_capita(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> PerCapitaResult:
    """Check per-capita monotonicity of anonymous ballots.

    Anonymity reduces the scan to coalition sizes s < s' using the nested
    representatives {1..s} and {1..s'}.

    Raises:
        RequiresAnonymityError: If the ballots depend on voter identity
        InvalidThresholdsError: If the thresholds are invalid
    """
    n, m = ballots.n, ballots.m
    validate_thresholds(m, k_lo, k_hi)
    if not check_anonymous_ballots(ballots):
        raise RequiresAnonymityError("Per-capita monotonicity is defined for anonymous ballots")
    grand = coalitions.grand(n)
    for small in range(1, n):
        for large in range(small + 1, n):
            s, s_prime = (1 << small) - 1, (1 << large) - 1
            for t in range(k_hi, m + 1):
                lhs = ballots.upper_mass(s_prime, t) / large
                rhs = ballots.upper_mass(s, t) / small
                if lhs < rhs:
                    return PerCapitaResult(
                        False, PerCapitaWitness(s, s_prime, "right", t, lhs, rhs)
                    )
            rest, rest_prime = grand & ~s, grand & ~s_prime
            for a in range(1, k_lo + 1):
                lhs = ballots.lower_mass(rest_prime, a) / large
                rhs = ballots.lower_mass(rest, a) / small
                if lhs < rhs:
                    return PerCapitaResult(
                        False, PerCapitaWitness(s, s_prime, "left", a, lhs, rhs)
                    )
    return PerCapitaResult(True)


def find_dictator(ballots: DeterministicBallots, k_lo: int, k_hi: int) -> int | None:
    """The voter i with b_S in R iff i is in S, if any.

    Returns:
        The constrained dictator, or None when no voter qualifies
    """
    validate_thresholds(ballots.m, k_lo, k_hi)
    for voter in range(1, ballots.n + 1):
        if all(
            (ballots[s] >= k_hi) if coalitions.contains(s, voter) else (ballots[s] <= k_lo)
            for s in coalitions.all_coalitions(ballots.n)
        ):
            return voter
    return None
