"""Evaluation of fixed ballot rules and random dictatorships at top profiles."""

from collections.abc import Sequence
from fractions import Fraction

from src.domain.exceptions.domain_exceptions import (
    BadWeightsError,
    EmptyCollectionError,
    InternalInconsistencyError,
    InvalidBallotsError,
)
from src.domain.services.ballot_checks import require_valid_ballots
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.coalition import Coalition
from src.domain.value_objects.lottery import ONE, ZERO, Lottery
from src.domain.value_objects.profile import TopProfile


def s_upper(k: int, tops: TopProfile) -> Coalition:
    """The coalition of voters whose peak is a_k or above; empty at k = m + 1."""
    return coalitions.of(i for i, top in enumerate(tops.tops, start=1) if top >= k)


def _check_sizes(ballots: ProbabilisticBallots | DeterministicBallots, tops: TopProfile) -> None:
    if ballots.n != tops.n or ballots.m != tops.m:
        raise InvalidBallotsError(
            f"Ballots for n={ballots.n}, m={ballots.m} cannot evaluate a profile "
            f"with n={tops.n}, m={tops.m}"
        )


def eval_pfbr(ballots: ProbabilisticBallots, tops: TopProfile) -> Lottery:
    """Evaluate the probabilistic fixed ballot rule.

    phi(a_k) = beta_{S(k)}([a_k, am]) - beta_{S(k+1)}([a_k+1, am]).

    Raises:
        InvalidBallotsError: If the ballots fail unanimity or monotonicity,
            or their sizes do not match the profile
    """
    table = require_valid_ballots(ballots)
    _check_sizes(table, tops)
    m = table.m
    tails = table.upper_masses
    upper = [tails[s_upper(k, tops)][k] for k in range(1, m + 2)]
    return Lottery(tuple(upper[k - 1] - upper[k] for k in range(1, m + 1)))


def eval_fbr(ballots: DeterministicBallots, tops: TopProfile) -> Alternative:
    """Evaluate a fixed ballot rule as the max over coalitions of min(peaks in S, b_S).

    The result is cross-checked against the probabilistic evaluation of the
    degenerate lottery table.

    Raises:
        InvalidBallotsError: If the ballots fail unanimity or monotonicity
        InternalInconsistencyError: If the two evaluations disagree
    """
    degenerate = require_valid_ballots(ballots)
    _check_sizes(ballots, tops)
    best = 1
    for s in coalitions.all_coalitions(ballots.n):
        floor = min((tops.top(i) for i in coalitions.members(s, ballots.n)), default=ballots[s])
        best = max(best, min(floor, ballots[s]))
    if eval_pfbr(degenerate, tops) != Lottery.point_mass(best, ballots.m):
        raise InternalInconsistencyError(
            f"Max-min evaluation a{best} disagrees with the degenerate lottery rule "
            f"at tops {tops.tops}"
        )
    return best


def validate_coefficients(epsilon: Sequence[Fraction], n: int | None = None) -> tuple[Fraction, ...]:
    """Coerce and check a probability vector over voters.

    Raises:
        BadWeightsError: If an entry is negative, the sum is not 1 or the
            length differs from n
    """
    weights = tuple(Fraction(e) for e in epsilon)
    if n is not None and len(weights) != n:
        raise BadWeightsError(f"Expected {n} coefficients, got {len(weights)}")
    if any(e < 0 for e in weights) or sum(weights) != ONE:
        raise BadWeightsError(
            f"Coefficients {[str(e) for e in weights]} must be nonnegative and sum to 1"
        )
    return weights


def eval_random_dictatorship(epsilon: Sequence[Fraction], tops: TopProfile) -> Lottery:
    """The lottery sum_i epsilon_i e_{top_i}.

    Raises:
        BadWeightsError: If epsilon is not a probability vector over the voters
    """
    weights = validate_coefficients(epsilon, tops.n)
    probs = [ZERO] * tops.m
    for weight, top in zip(weights, tops.tops, strict=True):
        probs[top - 1] += weight
    return Lottery(tuple(probs))


def mixture_to_ballots(
    fbrs: Sequence[tuple[Fraction, DeterministicBallots]],
) -> ProbabilisticBallots:
    """Mix deterministic ballot families into beta_S = sum_k w_k e_{b_S^k}.

    Raises:
        EmptyCollectionError: If no families are given
        BadWeightsError: If a weight is not positive or the weights do not sum to 1
        InvalidBallotsError: If the families differ in n or m
    """
    if not fbrs:
        raise EmptyCollectionError("Cannot mix an empty list of ballot families")
    weights = [Fraction(w) for w, _ in fbrs]
    if any(w <= 0 for w in weights) or sum(weights) != ONE:
        raise BadWeightsError(
            f"Mixture weights {[str(w) for w in weights]} must be positive and sum to 1"
        )
    n, m = fbrs[0][1].n, fbrs[0][1].m
    if any(b.n != n or b.m != m for _, b in fbrs):
        raise InvalidBallotsError("Every mixed ballot family must share n and m")
    table = []
    for s in coalitions.all_coalitions(n):
        probs = [ZERO] * m
        for weight, (_, family) in zip(weights, fbrs, strict=True):
            probs[family[s] - 1] += weight
        table.append(Lottery(tuple(probs)))
    return ProbabilisticBallots(n, m, tuple(table))
