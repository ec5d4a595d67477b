"""Builders and random samplers for ballot tables."""

import random
from collections.abc import Sequence
from fractions import Fraction
from itertools import product

from src.domain.exceptions.domain_exceptions import BadWeightsError, DegenerateSizeError
from src.domain.services.ballot_checks import check_monotonicity, find_dictator
from src.domain.services.domain_generators import validate_thresholds
from src.domain.services.rule_evaluation import mixture_to_ballots, validate_coefficients
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import ONE, ZERO, Lottery
from src.domain.value_objects.profile import validate_voters

SAMPLE_DENOMINATOR = 12
MAX_ENUMERATED_COALITIONS = 14


def dictatorship(voter: int, n: int) -> tuple[Fraction, ...]:
    """Coefficients of the random dictatorship that always follows one voter."""
    validate_voters(n)
    if not 1 <= voter <= n:
        raise BadWeightsError(f"Voter {voter} is not among 1..{n}")
    return tuple(ONE if i == voter else ZERO for i in range(1, n + 1))


def random_dictatorship_ballots(epsilon: Sequence[Fraction], m: int) -> ProbabilisticBallots:
    """Ballots whose rule is the random dictatorship with coefficients epsilon.

    beta_S puts the members' total weight on am and the rest on a1.
    """
    weights = validate_coefficients(epsilon)
    n = len(weights)
    table = []
    for s in coalitions.all_coalitions(n):
        inside = sum((weights[i - 1] for i in coalitions.members(s, n)), ZERO)
        probs = [ZERO] * m
        probs[0] += 1 - inside
        probs[m - 1] += inside
        table.append(Lottery(tuple(probs)))
    return ProbabilisticBallots(n, m, tuple(table))


def anonymize(ballots: ProbabilisticBallots) -> ProbabilisticBallots:
    """Average the ballots of each coalition size class."""
    n, m = ballots.n, ballots.m
    by_size = []
    for k in range(n + 1):
        members = [ballots[s] for s in coalitions.of_size(n, k)]
        by_size.append(
            Lottery(
                tuple(sum((b[a] for b in members), ZERO) / len(members) for a in range(1, m + 1))
            )
        )
    return ProbabilisticBallots.from_sizes(n, by_size)


def sample_monotone_ballots(
    rng: random.Random, n: int, m: int, denominator: int = SAMPLE_DENOMINATOR
) -> ProbabilisticBallots:
    """Draw a ballot table satisfying ballot unanimity and monotonicity.

    Random tail masses u_S(k) are closed upwards: the tail T_S(k) is the
    largest u_T(k') over T within S and k' >= k, with T_N = 1 and the empty
    coalition fixed at 0. Point masses are differences of consecutive tails.
    """
    validate_voters(n)
    grand = coalitions.grand(n)
    tails: list[list[Fraction]] = []
    for s in coalitions.all_coalitions(n):
        row = [ZERO] * (m + 2)
        row[1] = ONE
        for k in range(m, 1, -1):
            if s == grand:
                row[k] = ONE
                continue
            drawn = Fraction(rng.randint(0, denominator), denominator) if s else ZERO
            inherited = [tails[s & ~(1 << (i - 1))][k] for i in coalitions.members(s, n)]
            row[k] = max([drawn, row[k + 1], *inherited])
        tails.append(row)
    table = tuple(
        Lottery(tuple(row[k] - row[k + 1] for k in range(1, m + 1))) for row in tails
    )
    return ProbabilisticBallots(n, m, table)


def sample_fbr(rng: random.Random, n: int, m: int, k_lo: int, k_hi: int) -> DeterministicBallots:
    """Draw a monotone constrained-dictatorship ballot family.

    Coalitions are filled by increasing size; each ballot is drawn from its
    allowed side (R when the dictator belongs, L otherwise) at or above the
    ballots of its immediate subsets.
    """
    validate_voters(n)
    validate_thresholds(m, k_lo, k_hi)
    dictator = rng.randint(1, n)
    table = [1] * (1 << n)
    table[coalitions.grand(n)] = m
    for k in range(1, n):
        for s in coalitions.of_size(n, k):
            floor = max(table[s & ~(1 << (i - 1))] for i in coalitions.members(s, n))
            side = range(k_hi, m + 1) if coalitions.contains(s, dictator) else range(1, k_lo + 1)
            table[s] = rng.choice([a for a in side if a >= floor])
    return DeterministicBallots(n, m, tuple(table))


def sample_fbr_mixture(
    rng: random.Random, n: int, m: int, k_lo: int, k_hi: int, components: int
) -> ProbabilisticBallots:
    """Mix randomly drawn constrained-dictatorship FBRs with random positive weights."""
    if components < 1:
        raise BadWeightsError("A mixture needs at least one component")
    raw = [rng.randint(1, SAMPLE_DENOMINATOR) for _ in range(components)]
    total = sum(raw)
    return mixture_to_ballots(
        [(Fraction(w, total), sample_fbr(rng, n, m, k_lo, k_hi)) for w in raw]
    )


def enumerate_fbr_families(n: int, m: int, k_lo: int, k_hi: int) -> list[DeterministicBallots]:
    """Every monotone, ballot-unanimous constrained-dictatorship ballot family.

    Raises:
        DegenerateSizeError: If there are too many coalitions to enumerate
    """
    validate_voters(n)
    validate_thresholds(m, k_lo, k_hi)
    proper = list(coalitions.proper_nonempty(n))
    if len(proper) > MAX_ENUMERATED_COALITIONS:
        raise DegenerateSizeError(
            f"Enumerating ballot families over {len(proper)} coalitions is not supported"
        )
    left, right = range(1, k_lo + 1), range(k_hi, m + 1)
    families: list[DeterministicBallots] = []
    for dictator in range(1, n + 1):
        sides = [right if coalitions.contains(s, dictator) else left for s in proper]
        for choice in product(*sides):
            table = (1, *choice, m)
            family = DeterministicBallots(n, m, table)
            if check_monotonicity(family) and find_dictator(family, k_lo, k_hi) == dictator:
                families.append(family)
    return families
