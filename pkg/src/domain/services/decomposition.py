"""Decomposition of anonymous constrained ballot tables into fixed ballot rules.

Each round reads the boundary atoms of every coalition ballot (the largest
supported alternative on the left interval and the smallest on the right),
turns them into one constrained-dictatorship ballot family per voter, and
peels off the largest weight alpha those families can carry. The residual
table has strictly smaller supports, so the loop ends once every proper
coalition ballot is supported on its two atoms.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from src.domain.exceptions.domain_exceptions import (
    BadWeightsError,
    CrdViolatedError,
    InternalInconsistencyError,
    InvalidThresholdsError,
    NotAnonymousError,
    NotCrdError,
    NotPerCapitaMonotoneError,
    PerCapitaRequiredError,
    TerminalCaseError,
)
from src.domain.services.ballot_checks import (
    check_anonymous_ballots,
    check_ballot_unanimity,
    check_crd,
    check_monotonicity,
    check_per_capita,
    find_dictator,
)
from src.domain.services.domain_generators import gen_hybrid, validate_thresholds
from src.domain.services.mechanism_audit import MechanismAuditor
from src.domain.services.rule_evaluation import eval_fbr, eval_pfbr, mixture_to_ballots
from src.domain.services.rules import FbrRule
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.coalition import Coalition
from src.domain.value_objects.lottery import ZERO, Lottery
from src.domain.value_objects.profile import TopProfile

type Component = tuple[Fraction, DeterministicBallots]


def support(lottery: Lottery) -> frozenset[Alternative]:
    """Alternatives with positive probability."""
    return lottery.support()


def boundary_atoms(
    ballots: ProbabilisticBallots, coalition: Coalition, k_lo: int, k_hi: int
) -> tuple[Alternative, Alternative]:
    """The largest supported alternative in L and the smallest in R.

    The empty coalition's left atom is a1 and the grand coalition's right
    atom is am; the other atom of those two coalitions carries no weight and
    is reported as a1 or am as well.

    Raises:
        CrdViolatedError: If a proper coalition's ballot misses L or R
    """
    n, m = ballots.n, ballots.m
    if coalition in (coalitions.EMPTY, coalitions.grand(n)):
        return 1, m
    supported = support(ballots[coalition])
    left = [a for a in supported if a <= k_lo]
    right = [a for a in supported if a >= k_hi]
    if not left or not right:
        side = "L" if not left else "R"
        raise CrdViolatedError(
            f"Ballot of {coalitions.render(coalition, n)} has no mass on {side}"
        )
    return max(left), min(right)


def build_voter_ballots(
    ballots: ProbabilisticBallots, voter: int, k_lo: int, k_hi: int
) -> DeterministicBallots:
    """b_S = right atom of S if the voter is in S, otherwise its left atom.

    The table is not checked for monotonicity.
    """
    table = []
    for s in coalitions.all_coalitions(ballots.n):
        left, right = boundary_atoms(ballots, s, k_lo, k_hi)
        table.append(right if coalitions.contains(s, voter) else left)
    return DeterministicBallots(ballots.n, ballots.m, tuple(table))


def voter_fbr(
    ballots: ProbabilisticBallots, voter: int, k_lo: int, k_hi: int
) -> DeterministicBallots:
    """The constrained-dictatorship ballot family of one voter.

    Raises:
        PerCapitaRequiredError: If the family is not monotone, which happens
            only when the input fails per-capita monotonicity
    """
    family = build_voter_ballots(ballots, voter, k_lo, k_hi)
    result = check_monotonicity(family)
    if not result:
        assert result.violation is not None
        raise PerCapitaRequiredError(
            f"Ballots of voter {voter} drop from "
            f"{coalitions.render(result.violation.smaller, ballots.n)} to "
            f"{coalitions.render(result.violation.larger, ballots.n)}"
        )
    return family


def alpha(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> Fraction:
    """The largest weight the voter families can take out of the table.

    min over proper coalitions S of beta_S(right atom) / |S| and
    beta_S(left atom) / (n - |S|).
    """
    n = ballots.n
    best: Fraction | None = None
    for s in coalitions.proper_nonempty(n):
        left, right = boundary_atoms(ballots, s, k_lo, k_hi)
        size = coalitions.size(s)
        candidate = min(ballots[s][right] / size, ballots[s][left] / (n - size))
        best = candidate if best is None else min(best, candidate)
    assert best is not None
    return best


def is_terminal(ballots: ProbabilisticBallots) -> bool:
    """True iff every proper coalition ballot has exactly two supported alternatives."""
    return all(len(support(ballots[s])) == 2 for s in coalitions.proper_nonempty(ballots.n))


@dataclass(frozen=True)
class Refinement:
    """One refinement step: beta = alpha n gamma + (1 - alpha n) refined.

    Attributes:
        gamma: The table of voter-averaged boundary atoms
        refined: The residual table
        alpha: The extracted weight per voter
    """

    gamma: ProbabilisticBallots
    refined: ProbabilisticBallots
    alpha: Fraction


def refine(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> Refinement:
    """Split the boundary-atom table off the ballots.

    Raises:
        TerminalCaseError: If alpha = 1/n
        InternalInconsistencyError: If the residual is not a lottery table
            or the split does not reproduce the input
    """
    n, m = ballots.n, ballots.m
    weight = alpha(ballots, k_lo, k_hi)
    if weight * n == 1:
        raise TerminalCaseError("Every proper coalition ballot sits on its two boundary atoms")
    share = weight * n
    gamma_table = []
    refined_table = []
    for s in coalitions.all_coalitions(n):
        left, right = boundary_atoms(ballots, s, k_lo, k_hi)
        inside = Fraction(coalitions.size(s), n)
        gamma = [ZERO] * m
        gamma[right - 1] += inside
        gamma[left - 1] += 1 - inside
        residual = [(p - share * g) / (1 - share) for p, g in zip(ballots[s].probs, gamma, strict=True)]
        if any(p < 0 for p in residual):
            raise InternalInconsistencyError(
                f"Refining {coalitions.render(s, n)} leaves negative mass"
            )
        gamma_table.append(Lottery(tuple(gamma)))
        refined_table.append(Lottery(tuple(residual)))
    step = Refinement(
        ProbabilisticBallots(n, m, tuple(gamma_table)),
        ProbabilisticBallots(n, m, tuple(refined_table)),
        weight,
    )
    for s in coalitions.all_coalitions(n):
        recombined = tuple(
            share * g + (1 - share) * r
            for g, r in zip(step.gamma[s].probs, step.refined[s].probs, strict=True)
        )
        if recombined != ballots[s].probs:
            raise InternalInconsistencyError("Refinement does not recombine to the input")
    return step


@dataclass(frozen=True)
class DecompositionRound:
    """Trace entry of one round.

    Attributes:
        alpha: Weight per voter family, relative to the residual
        weight: Absolute weight of each voter family in this round
        voter_ballots: The n voter families extracted
        ballots: The table the round started from
        total_support: Sum of support sizes of that table
        terminal: Whether the round closed the decomposition
    """

    alpha: Fraction
    weight: Fraction
    voter_ballots: tuple[DeterministicBallots, ...]
    ballots: ProbabilisticBallots
    total_support: int
    terminal: bool


@dataclass(frozen=True)
class DecompositionResult:
    """Weighted fixed ballot rules whose mixture is the input table.

    Identical families from different rounds are merged with summed weights.
    """

    components: tuple[Component, ...]
    trace: tuple[DecompositionRound, ...]
    k_lo: int
    k_hi: int

    @property
    def total_weight(self) -> Fraction:
        return sum((w for w, _ in self.components), ZERO)


def _merge(components: list[Component]) -> tuple[Component, ...]:
    merged: dict[DeterministicBallots, Fraction] = {}
    for weight, family in components:
        merged[family] = merged.get(family, ZERO) + weight
    return tuple((w, family) for family, w in merged.items())


def _check_round_invariants(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> None:
    n = ballots.n
    failures = []
    if not check_ballot_unanimity(ballots):
        failures.append("ballot unanimity")
    if not check_monotonicity(ballots):
        failures.append("monotonicity")
    if not check_anonymous_ballots(ballots):
        failures.append("anonymity")
    elif not check_per_capita(ballots, k_lo, k_hi):
        failures.append("per-capita monotonicity")
    epsilon = check_crd(ballots, k_lo, k_hi)
    if epsilon is None or any(e != Fraction(1, n) for e in epsilon):
        failures.append("equal dictatorial coefficients")
    if failures:
        raise InternalInconsistencyError(
            "A refinement round broke " + ", ".join(failures)
        )


def decompose_anonymous(ballots: ProbabilisticBallots, k_lo: int, k_hi: int) -> DecompositionResult:
    """Decompose an anonymous constrained ballot table into fixed ballot rules.

    Args:
        ballots: Anonymous ballots satisfying the CRD condition
        k_lo: Left threshold
        k_hi: Right threshold, with 1 < k_hi - k_lo < m - 1

    Returns:
        The merged components with the per-round trace

    Raises:
        InvalidThresholdsError: If the thresholds are out of scope
        NotAnonymousError: If ballots depend on voter identity
        NotCrdError: If the CRD condition fails
        NotPerCapitaMonotoneError: If per-capita monotonicity fails (carries the witness)
        InternalInconsistencyError: If a round invariant or the reconstruction fails
    """
    n, m = ballots.n, ballots.m
    validate_thresholds(m, k_lo, k_hi)
    if not 1 < k_hi - k_lo < m - 1:
        raise InvalidThresholdsError(
            f"Decomposition needs 1 < k_hi - k_lo < m - 1, got ({k_lo}, {k_hi}) with m={m}"
        )
    if not check_anonymous_ballots(ballots):
        raise NotAnonymousError("Only anonymous ballot tables can be decomposed")
    if check_crd(ballots, k_lo, k_hi) is None:
        raise NotCrdError(
            f"Ballots do not split between [a1, a{k_lo}] and [a{k_hi}, a{m}] by coalition weight"
        )
    per_capita = check_per_capita(ballots, k_lo, k_hi)
    if not per_capita:
        raise NotPerCapitaMonotoneError(
            "Ballots fail per-capita monotonicity and are not decomposable",
            witness=per_capita.witness,
        )

    components: list[Component] = []
    trace: list[DecompositionRound] = []
    current, residual = ballots, Fraction(1)
    last_support = current.total_support() + 1
    while True:
        _check_round_invariants(current, k_lo, k_hi)
        total_support = current.total_support()
        if total_support >= last_support:
            raise InternalInconsistencyError("Supports did not shrink in a refinement round")
        last_support = total_support
        families = tuple(voter_fbr(current, i, k_lo, k_hi) for i in range(1, n + 1))
        if is_terminal(current):
            weight = residual / n
            components.extend((weight, f) for f in families)
            trace.append(
                DecompositionRound(Fraction(1, n), weight, families, current, total_support, True)
            )
            break
        step = refine(current, k_lo, k_hi)
        weight = residual * step.alpha
        components.extend((weight, f) for f in families)
        trace.append(
            DecompositionRound(step.alpha, weight, families, current, total_support, False)
        )
        residual *= 1 - step.alpha * n
        current = step.refined

    merged = _merge(components)
    if mixture_to_ballots(merged) != ballots:
        raise InternalInconsistencyError("Components do not mix back to the input ballots")
    return DecompositionResult(merged, tuple(trace), k_lo, k_hi)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking a decomposition layer by layer.

    Attributes:
        holds: True iff every layer passes
        failed_layer: "ballots", "rule" or "fbr" for the first failing layer
        detail: What failed
    """

    holds: bool
    failed_layer: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.holds


def verify_decomposition(
    ballots: ProbabilisticBallots,
    result: DecompositionResult,
    auditor: MechanismAuditor | None = None,
) -> VerificationResult:
    """Check a decomposition at the ballot, rule and component level.

    The ballot layer mixes the components back; the rule layer compares the
    two rules at every top profile; the fbr layer audits each component for
    unanimity and strategy-proofness on the full hybrid domain.
    """
    try:
        mixed = mixture_to_ballots(result.components)
    except BadWeightsError as e:
        return VerificationResult(False, "ballots", str(e))
    if mixed != ballots:
        return VerificationResult(False, "ballots", "mixture differs from the input table")

    n, m = ballots.n, ballots.m
    for raw in product(range(1, m + 1), repeat=n):
        tops = TopProfile(raw, m)
        probs = [ZERO] * m
        for weight, family in result.components:
            probs[eval_fbr(family, tops) - 1] += weight
        if eval_pfbr(ballots, tops) != Lottery(tuple(probs)):
            return VerificationResult(False, "rule", f"rules differ at tops {raw}")

    auditor = auditor or MechanismAuditor()
    domain = gen_hybrid(m, result.k_lo, result.k_hi)
    for index, (_, family) in enumerate(result.components, start=1):
        if find_dictator(family, result.k_lo, result.k_hi) is None:
            return VerificationResult(False, "fbr", f"component {index} has no constrained dictator")
        rule = FbrRule(family)
        for report in (
            auditor.check_unanimity(rule, domain, n),
            auditor.check_strategy_proofness(rule, domain, n),
        ):
            if not report:
                return VerificationResult(
                    False, "fbr", f"component {index} fails {report.check.value}"
                )
    return VerificationResult(True)
