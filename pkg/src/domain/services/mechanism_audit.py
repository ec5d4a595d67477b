"""Brute-force audits of rule properties over finite preference domains.

Every scan visits profiles in lexicographic order and stops at the first
violation, so the reported counterexample is the smallest one. Scans are
split into chunks by the first voter's top (or preference); chunks may run
in worker processes and are merged in chunk order, which keeps reports
independent of scheduling.
"""

import random
import time
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from src.domain.constants import DEFAULT_BUDGET, DEFAULT_PATH_CAP, AuditCheck
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    BadWeightsError,
    BudgetExceededError,
    PreconditionFailedError,
)
from src.domain.services.ballot_checks import check_crd
from src.domain.services.ballot_construction import sample_monotone_ballots
from src.domain.services.rule_evaluation import (
    eval_random_dictatorship,
    validate_coefficients,
)
from src.domain.services.rules import PfbrRule, Rule, TopsOnlyRule, TopsOnlyView
from src.domain.services.strong_connectedness import all_vertex_paths, strong_conn_graph
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.ballots import ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery, first_dominance_failure
from src.domain.value_objects.preference import Preference
from src.domain.value_objects.profile import Profile, TopProfile, validate_voters

MAX_SAMPLE_ATTEMPTS_FACTOR = 20


@dataclass(frozen=True)
class Manipulation:
    """A profitable misreport: the manipulated lottery is not dominated.

    Attributes:
        profile: The sincere profile
        voter: The deviating voter (1-based)
        misreport: The reported preference
        truthful: Lottery at the sincere profile
        manipulated: Lottery after the misreport
        prefix: Length of the first upper contour set of the sincere
            preference on which the truthful lottery has less mass
    """

    profile: Profile
    voter: int
    misreport: Preference
    truthful: Lottery
    manipulated: Lottery
    prefix: int

    @property
    def sincere(self) -> Preference:
        """The deviating voter's true preference."""
        return self.profile.preference(self.voter)

    def replays(self, rule: Rule) -> bool:
        """True iff re-evaluating the rule reproduces this exact failure."""
        truthful = rule.evaluate(self.profile)
        manipulated = rule.evaluate(self.profile.with_preference(self.voter, self.misreport))
        return (
            truthful == self.truthful
            and manipulated == self.manipulated
            and first_dominance_failure(truthful, manipulated, self.sincere) == self.prefix
        )


@dataclass(frozen=True)
class Witness:
    """Profiles and lotteries showing a non-strategic property fails."""

    description: str
    profiles: tuple[Profile | TopProfile, ...]
    lotteries: tuple[Lottery, ...]


@dataclass(frozen=True)
class AuditReport:
    """Verdict of one audit check.

    Attributes:
        check: The audited property
        holds: The verdict
        profiles_examined: Profiles visited up to the verdict, in scan order;
            the same for any number of worker processes
        counterexample: The smallest manipulation (strategy-proofness checks)
        witness: The smallest failure of any other check
        coefficients: Fitted random-dictatorship weights (middle-interval check)
        tops_only_reduction: Whether the scan ran over top profiles
        elapsed_seconds: Wall time of the scan
    """

    check: AuditCheck
    holds: bool
    profiles_examined: int
    counterexample: Manipulation | None = None
    witness: Witness | None = None
    coefficients: tuple[Fraction, ...] | None = None
    tops_only_reduction: bool = False
    elapsed_seconds: float = field(default=0.0, compare=False)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class CompromiseObservation:
    """Probabilities two rules put on a shared second-ranked alternative."""

    profile: Profile
    compromise: Alternative
    first: Fraction
    second: Fraction


@dataclass(frozen=True)
class CompromiseReport:
    """Comparison of two rules over every compromise profile."""

    observations: tuple[CompromiseObservation, ...]

    @property
    def weakly_dominates(self) -> bool:
        """True iff the first rule never gives the compromise less probability."""
        return self.weak_failure is None

    @property
    def weak_failure(self) -> CompromiseObservation | None:
        return next((o for o in self.observations if o.first < o.second), None)

    @property
    def strict_witness(self) -> CompromiseObservation | None:
        return next((o for o in self.observations if o.first > o.second), None)

    @property
    def dominates(self) -> bool:
        """Weak dominance with at least one strict improvement."""
        return self.weakly_dominates and self.strict_witness is not None

    def at(self, tops: Sequence[Alternative], compromise: Alternative) -> list[CompromiseObservation]:
        """Observations at a given top profile and compromise."""
        return [
            o
            for o in self.observations
            if o.profile.tops().tops == tuple(tops) and o.compromise == compromise
        ]


@dataclass(frozen=True)
class SampledAuditReport:
    """Strategy-proofness of randomly drawn ballot tables without the CRD condition.

    Attributes:
        samples: Tables audited
        seed: Seed of the sampler
        skipped: Drawn tables discarded because they satisfy the condition
        sp_failures: Audited tables that are manipulable
        findings: Audited tables that passed strategy-proofness
    """

    samples: int
    seed: int
    skipped: int
    sp_failures: int
    findings: tuple[ProbabilisticBallots, ...]

    @property
    def failure_share(self) -> Fraction:
        return Fraction(self.sp_failures, self.samples) if self.samples else Fraction(0)


type _ChunkResult = tuple[int, Manipulation | None]


def _misreports(
    domain: Domain, sincere: Preference, local: bool
) -> list[tuple[Alternative, Preference]]:
    """(reported top, reported preference) pairs for a tops-only scan."""
    if local:
        return sorted(
            (q.top, q) for q in domain.neighbours(sincere) if q.top != sincere.top
        )
    return [(a, domain.with_top(a)[0]) for a in domain.peaks() if a != sincere.top]


def _representative_profile(
    domain: Domain, tops: TopProfile, voter: int, sincere: Preference
) -> Profile:
    return Profile(
        tuple(
            sincere if i == voter else domain.with_top(top)[0]
            for i, top in enumerate(tops.tops, start=1)
        )
    )


def _scan_tops_chunk(
    rule: TopsOnlyRule, domain: Domain, n: int, first_top: Alternative, local: bool
) -> _ChunkResult:
    """Strategy-proofness over top profiles whose first voter peaks at first_top."""
    cache: dict[TopProfile, Lottery] = {}

    def value(tops: TopProfile) -> Lottery:
        if tops not in cache:
            cache[tops] = rule.evaluate_tops(tops)
        return cache[tops]

    examined = 0
    for rest in product(domain.peaks(), repeat=n - 1):
        tops = TopProfile((first_top, *rest), domain.m)
        examined += 1
        truthful = value(tops)
        for voter in range(1, n + 1):
            for sincere in domain.with_top(tops.top(voter)):
                for top, misreport in _misreports(domain, sincere, local):
                    manipulated = value(tops.with_top(voter, top))
                    prefix = first_dominance_failure(truthful, manipulated, sincere)
                    if prefix is not None:
                        profile = _representative_profile(domain, tops, voter, sincere)
                        return examined, Manipulation(
                            profile, voter, misreport, truthful, manipulated, prefix
                        )
    return examined, None


def _scan_full_chunk(
    rule: Rule, domain: Domain, n: int, first: Preference, local: bool
) -> _ChunkResult:
    """Strategy-proofness over full profiles whose first voter reports first."""
    examined = 0
    for rest in product(domain, repeat=n - 1):
        profile = Profile((first, *rest))
        examined += 1
        truthful = rule.evaluate(profile)
        for voter in range(1, n + 1):
            sincere = profile.preference(voter)
            candidates = domain.neighbours(sincere) if local else tuple(domain)
            for misreport in candidates:
                if misreport == sincere:
                    continue
                manipulated = rule.evaluate(profile.with_preference(voter, misreport))
                prefix = first_dominance_failure(truthful, manipulated, sincere)
                if prefix is not None:
                    return examined, Manipulation(
                        profile, voter, misreport, truthful, manipulated, prefix
                    )
    return examined, None


def _unanimous_outcomes(
    rule: Rule, domain: Domain, n: int, a: Alternative
) -> Iterator[tuple[Profile | TopProfile, Lottery]]:
    if isinstance(rule, TopsOnlyRule):
        tops = TopProfile((a,) * n, domain.m)
        yield tops, rule.evaluate_tops(tops)
        return
    for prefs in product(domain.with_top(a), repeat=n):
        profile = Profile(prefs)
        yield profile, rule.evaluate(profile)


def find_manipulation(
    rule: TopsOnlyRule,
    domain: Domain,
    tops: TopProfile,
    voter: int,
    misreport_top: Alternative,
) -> Manipulation | None:
    """Replay one deviation of a tops-only rule against every sincere preference.

    Returns:
        The manipulation for the first sincere preference in the domain with
        the voter's top under which the deviation pays off, else None
    """
    truthful = rule.evaluate_tops(tops)
    manipulated = rule.evaluate_tops(tops.with_top(voter, misreport_top))
    misreport = domain.with_top(misreport_top)[0]
    for sincere in domain.with_top(tops.top(voter)):
        prefix = first_dominance_failure(truthful, manipulated, sincere)
        if prefix is not None:
            profile = _representative_profile(domain, tops, voter, sincere)
            return Manipulation(profile, voter, misreport, truthful, manipulated, prefix)
    return None


class MechanismAuditor:
    """Runs the property checks with a shared budget, worker count and path cap."""

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        jobs: int = 1,
        path_cap: int = DEFAULT_PATH_CAP,
    ) -> None:
        """Initialize the auditor.

        Args:
            budget: Maximum number of evaluations or dominance checks per scan
            jobs: Worker processes for strategy-proofness scans
            path_cap: Maximum vertex paths per endpoint pair
        """
        self.budget = budget
        self.jobs = jobs
        self.path_cap = path_cap

    def _charge(self, estimate: int, what: str) -> None:
        if estimate > self.budget:
            raise BudgetExceededError(
                f"{what} needs about {estimate} checks, over the budget of {self.budget}"
            )

    def _run_chunks(
        self, worker: Callable[..., _ChunkResult], chunks: list[tuple[object, ...]]
    ) -> _ChunkResult:
        results: list[_ChunkResult] = []
        if self.jobs <= 1 or len(chunks) <= 1:
            for args in chunks:
                results.append(worker(*args))
                if results[-1][1] is not None:
                    break
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(worker, *zip(*chunks, strict=True)))
        examined = 0
        for count, found in results:
            examined += count
            if found is not None:
                return examined, found
        return examined, None

    def _top_profiles(self, domain: Domain, n: int) -> Iterator[TopProfile]:
        for tops in product(domain.peaks(), repeat=n):
            yield TopProfile(tops, domain.m)

    def _full_profiles(self, domain: Domain, n: int) -> Iterator[Profile]:
        for prefs in product(domain, repeat=n):
            yield Profile(prefs)

    def _tops_view(self, rule: Rule, domain: Domain, n: int) -> TopsOnlyRule:
        if isinstance(rule, TopsOnlyRule):
            return rule
        report = self.check_tops_only(rule, domain, n)
        if not report:
            raise PreconditionFailedError(f"{rule.name} is not tops-only on this domain")
        return TopsOnlyView(rule, domain)

    def check_unanimity(self, rule: Rule, domain: Domain, n: int) -> AuditReport:
        """Check that a unanimous peak is chosen for sure."""
        validate_voters(n)
        started = time.perf_counter()
        examined = 0
        for a in domain.peaks():
            expected = Lottery.point_mass(a, domain.m)
            for profile, lottery in _unanimous_outcomes(rule, domain, n, a):
                examined += 1
                if lottery != expected:
                    return AuditReport(
                        AuditCheck.UNANIMITY,
                        False,
                        examined,
                        witness=Witness(f"every voter peaks at a{a}", (profile,), (lottery,)),
                        tops_only_reduction=rule.tops_only,
                        elapsed_seconds=time.perf_counter() - started,
                    )
        return AuditReport(
            AuditCheck.UNANIMITY,
            True,
            examined,
            tops_only_reduction=rule.tops_only,
            elapsed_seconds=time.perf_counter() - started,
        )

    def check_strategy_proofness(
        self, rule: Rule, domain: Domain, n: int, local: bool = False
    ) -> AuditReport:
        """Check that truthful reporting stochastically dominates every misreport.

        Tops-only rules are scanned over top profiles, testing each deviation
        against every sincere preference sharing the truthful top. Other rules
        are first checked for the tops-only property and reduced when it holds.

        Args:
            rule: The audited rule
            domain: The common preference domain
            n: Number of voters
            local: Restrict misreports to preferences adjacent to the sincere one

        Raises:
            BudgetExceededError: If the scan would exceed the budget
        """
        validate_voters(n)
        check = AuditCheck.LOCAL_STRATEGY_PROOFNESS if local else AuditCheck.STRATEGY_PROOFNESS
        started = time.perf_counter()
        view: TopsOnlyRule | None = rule if isinstance(rule, TopsOnlyRule) else None
        if view is None and self.check_tops_only(rule, domain, n):
            view = TopsOnlyView(rule, domain)
        if view is not None:
            peaks = domain.peaks()
            self._charge(len(peaks) ** n * n * len(domain) * len(peaks), "Tops-only scan")
            chunks: list[tuple[object, ...]] = [(view, domain, n, a, local) for a in peaks]
            examined, found = self._run_chunks(_scan_tops_chunk, chunks)
        else:
            self._charge(len(domain) ** n * n * len(domain), "Full-profile scan")
            chunks = [(rule, domain, n, p, local) for p in domain]
            examined, found = self._run_chunks(_scan_full_chunk, chunks)
        return AuditReport(
            check,
            found is None,
            examined,
            counterexample=found,
            tops_only_reduction=view is not None,
            elapsed_seconds=time.perf_counter() - started,
        )

    def check_local_strategy_proofness(self, rule: Rule, domain: Domain, n: int) -> AuditReport:
        """Strategy-proofness against misreports adjacent to the sincere preference."""
        return self.check_strategy_proofness(rule, domain, n, local=True)

    def check_tops_only(self, rule: Rule, domain: Domain, n: int) -> AuditReport:
        """Check that profiles with equal tops get equal lotteries, over all of D^n."""
        validate_voters(n)
        self._charge(len(domain) ** n, "Tops-only check")
        started = time.perf_counter()
        seen: dict[TopProfile, tuple[Profile, Lottery]] = {}
        examined = 0
        for profile in self._full_profiles(domain, n):
            examined += 1
            lottery = rule.evaluate(profile)
            tops = profile.tops()
            if tops not in seen:
                seen[tops] = (profile, lottery)
                continue
            first, expected = seen[tops]
            if lottery != expected:
                return AuditReport(
                    AuditCheck.TOPS_ONLY,
                    False,
                    examined,
                    witness=Witness(
                        f"equal tops {tops.tops} give different lotteries",
                        (first, profile),
                        (expected, lottery),
                    ),
                    elapsed_seconds=time.perf_counter() - started,
                )
        return AuditReport(
            AuditCheck.TOPS_ONLY, True, examined, elapsed_seconds=time.perf_counter() - started
        )

    def check_anonymity(self, rule: Rule, domain: Domain, n: int) -> AuditReport:
        """Check invariance under voter permutations.

        Every profile is compared with its sorted rearrangement, which is
        equivalent to comparing all n! permutations.
        """
        validate_voters(n)
        started = time.perf_counter()
        examined = 0
        if isinstance(rule, TopsOnlyRule):
            self._charge(len(domain.peaks()) ** n, "Anonymity check")
            for tops in self._top_profiles(domain, n):
                examined += 1
                canonical = TopProfile(tuple(sorted(tops.tops)), domain.m)
                if tops == canonical:
                    continue
                lottery, expected = rule.evaluate_tops(tops), rule.evaluate_tops(canonical)
                if lottery != expected:
                    return self._anonymity_failure(
                        examined, started, canonical, tops, expected, lottery, True
                    )
        else:
            self._charge(len(domain) ** n, "Anonymity check")
            for profile in self._full_profiles(domain, n):
                examined += 1
                sorted_profile = Profile(tuple(sorted(profile.prefs)))
                if profile == sorted_profile:
                    continue
                lottery, expected = rule.evaluate(profile), rule.evaluate(sorted_profile)
                if lottery != expected:
                    return self._anonymity_failure(
                        examined, started, sorted_profile, profile, expected, lottery, False
                    )
        return AuditReport(
            AuditCheck.ANONYMITY,
            True,
            examined,
            tops_only_reduction=rule.tops_only,
            elapsed_seconds=time.perf_counter() - started,
        )

    @staticmethod
    def _anonymity_failure(
        examined: int,
        started: float,
        canonical: Profile | TopProfile,
        permuted: Profile | TopProfile,
        expected: Lottery,
        lottery: Lottery,
        reduced: bool,
    ) -> AuditReport:
        return AuditReport(
            AuditCheck.ANONYMITY,
            False,
            examined,
            witness=Witness(
                "a permutation of voters changes the lottery",
                (canonical, permuted),
                (expected, lottery),
            ),
            tops_only_reduction=reduced,
            elapsed_seconds=time.perf_counter() - started,
        )

    def check_uncompromising(self, rule: Rule, domain: Domain, n: int) -> AuditReport:
        """Check that moving a peak along a vertex path keeps off-path probabilities.

        Raises:
            PreconditionFailedError: If the rule is not tops-only, unanimous
                and strategy-proof on the domain
        """
        validate_voters(n)
        view = self._tops_view(rule, domain, n)
        for report in (
            self.check_unanimity(view, domain, n),
            self.check_strategy_proofness(view, domain, n),
        ):
            if not report:
                raise PreconditionFailedError(
                    f"The uncompromising check needs a unanimous strategy-proof rule; "
                    f"{report.check.value} fails for {rule.name}"
                )
        started = time.perf_counter()
        graph = strong_conn_graph(domain)
        peaks = domain.peaks()
        examined = 0
        for start, end in combinations(peaks, 2):
            for path in all_vertex_paths(graph, start, end, self.path_cap):
                off_path = [a for a in range(1, domain.m + 1) if a not in path]
                for voter in range(1, n + 1):
                    for others in product(peaks, repeat=n - 1):
                        tops = list(others)
                        tops.insert(voter - 1, start)
                        before = TopProfile(tuple(tops), domain.m)
                        after = before.with_top(voter, end)
                        examined += 1
                        lam, mu = view.evaluate_tops(before), view.evaluate_tops(after)
                        if any(lam[a] != mu[a] for a in off_path):
                            return AuditReport(
                                AuditCheck.UNCOMPROMISING,
                                False,
                                examined,
                                witness=Witness(
                                    f"voter {voter} moving along {path.vertices} shifts "
                                    f"probability off the path",
                                    (before, after),
                                    (lam, mu),
                                ),
                                tops_only_reduction=True,
                                elapsed_seconds=time.perf_counter() - started,
                            )
        return AuditReport(
            AuditCheck.UNCOMPROMISING,
            True,
            examined,
            tops_only_reduction=True,
            elapsed_seconds=time.perf_counter() - started,
        )

    def check_rd_on_middle(
        self, rule: Rule, domain: Domain, n: int, k_lo: int, k_hi: int
    ) -> AuditReport:
        """Fit and verify one random dictatorship on profiles peaked in [a_k_lo, a_k_hi].

        epsilon_i is the probability of a_k_hi when voter i alone peaks there
        and everyone else peaks at a_k_lo.

        Raises:
            PreconditionFailedError: If a threshold is nobody's peak or the
                rule is not tops-only
        """
        validate_voters(n)
        view = self._tops_view(rule, domain, n)
        middle = [a for a in domain.peaks() if k_lo <= a <= k_hi]
        if k_lo not in middle or k_hi not in middle:
            raise PreconditionFailedError(f"a{k_lo} and a{k_hi} must both be peaks of the domain")
        started = time.perf_counter()
        fitted = []
        for voter in range(1, n + 1):
            tops = TopProfile(tuple(k_hi if i == voter else k_lo for i in range(1, n + 1)), domain.m)
            fitted.append(view.evaluate_tops(tops)[k_hi])
        try:
            epsilon = validate_coefficients(fitted, n)
        except BadWeightsError:
            return AuditReport(
                AuditCheck.RD_ON_MIDDLE,
                False,
                n,
                witness=Witness(
                    f"fitted weights {[str(e) for e in fitted]} do not sum to 1", (), ()
                ),
                tops_only_reduction=True,
                elapsed_seconds=time.perf_counter() - started,
            )
        examined = 0
        for raw in product(middle, repeat=n):
            tops = TopProfile(raw, domain.m)
            examined += 1
            lottery = view.evaluate_tops(tops)
            expected = eval_random_dictatorship(epsilon, tops)
            if lottery != expected:
                return AuditReport(
                    AuditCheck.RD_ON_MIDDLE,
                    False,
                    examined,
                    witness=Witness(
                        "the rule departs from the fitted random dictatorship",
                        (tops,),
                        (lottery, expected),
                    ),
                    tops_only_reduction=True,
                    elapsed_seconds=time.perf_counter() - started,
                )
        return AuditReport(
            AuditCheck.RD_ON_MIDDLE,
            True,
            examined,
            coefficients=epsilon,
            tops_only_reduction=True,
            elapsed_seconds=time.perf_counter() - started,
        )

    def compromise_observations(
        self, first: Rule, second: Rule, domain: Domain, n: int
    ) -> list[CompromiseObservation]:
        """Both rules' probabilities on a_k at every profile where all voters rank a_k second.

        Profiles where every voter has the same peak are skipped.
        """
        validate_voters(n)
        by_second: dict[Alternative, list[Preference]] = {}
        for p in domain:
            by_second.setdefault(p.second, []).append(p)
        self._charge(sum(len(ps) ** n for ps in by_second.values()), "Compromise scan")
        observations = []
        for a in sorted(by_second):
            for prefs in product(by_second[a], repeat=n):
                if len({p.top for p in prefs}) == 1:
                    continue
                profile = Profile(prefs)
                observations.append(
                    CompromiseObservation(
                        profile, a, first.evaluate(profile)[a], second.evaluate(profile)[a]
                    )
                )
        return observations

    def compare_compromise(
        self, first: Rule, second: Rule, domain: Domain, n: int
    ) -> CompromiseReport:
        """Whether the first rule weakly dominates the second on compromise alternatives."""
        return CompromiseReport(tuple(self.compromise_observations(first, second, domain, n)))

    def run(
        self,
        checks: Sequence[AuditCheck],
        rule: Rule,
        domain: Domain,
        n: int,
        thresholds: tuple[int, int] | None = None,
    ) -> list[AuditReport]:
        """Run checks in order.

        Raises:
            PreconditionFailedError: If the middle-interval check has no thresholds
        """
        reports = []
        for check in checks:
            match check:
                case AuditCheck.UNANIMITY:
                    reports.append(self.check_unanimity(rule, domain, n))
                case AuditCheck.STRATEGY_PROOFNESS:
                    reports.append(self.check_strategy_proofness(rule, domain, n))
                case AuditCheck.LOCAL_STRATEGY_PROOFNESS:
                    reports.append(self.check_local_strategy_proofness(rule, domain, n))
                case AuditCheck.TOPS_ONLY:
                    reports.append(self.check_tops_only(rule, domain, n))
                case AuditCheck.ANONYMITY:
                    reports.append(self.check_anonymity(rule, domain, n))
                case AuditCheck.UNCOMPROMISING:
                    reports.append(self.check_uncompromising(rule, domain, n))
                case AuditCheck.RD_ON_MIDDLE:
                    if thresholds is None:
                        raise PreconditionFailedError(
                            "The middle-interval check needs thresholds"
                        )
                    reports.append(self.check_rd_on_middle(rule, domain, n, *thresholds))
        return reports

    def audit_sampled_ballots(
        self,
        domain: Domain,
        n: int,
        k_lo: int,
        k_hi: int,
        samples: int,
        seed: int,
    ) -> SampledAuditReport:
        """Audit strategy-proofness of random monotone tables violating the CRD condition.

        Drawn tables that satisfy the condition are skipped and redrawn.
        """
        rng = random.Random(seed)
        audited = skipped = failures = 0
        findings: list[ProbabilisticBallots] = []
        attempts = samples * MAX_SAMPLE_ATTEMPTS_FACTOR
        while audited < samples and audited + skipped < attempts:
            ballots = sample_monotone_ballots(rng, n, domain.m)
            if check_crd(ballots, k_lo, k_hi) is not None:
                skipped += 1
                continue
            audited += 1
            if self.check_strategy_proofness(PfbrRule(ballots), domain, n):
                findings.append(ballots)
            else:
                failures += 1
        return SampledAuditReport(audited, seed, skipped, failures, tuple(findings))

