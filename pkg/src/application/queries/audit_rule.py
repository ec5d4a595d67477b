"""Audit Rule and Sampled Audit queries and handlers."""

from collections.abc import Sequence
from dataclasses import dataclass, field

from src.application.queries.evaluate_rule import build_rule
from src.domain.constants import AuditCheck, Classification
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import MalformedInputError, PreconditionFailedError
from src.domain.services.mechanism_audit import (
    AuditReport,
    MechanismAuditor,
    SampledAuditReport,
)
from src.domain.services.threshold_recovery import recover_thresholds
from src.domain.value_objects.coalition import MAX_VOTERS
from src.infrastructure.logging import bind_problem, get_logger
from src.infrastructure.serialization import BallotsFile

logger = get_logger(__name__)


def hybrid_thresholds(domain: Domain, path_cap: int) -> tuple[int, int]:
    """Recover (k_lo, k_hi) from a hybrid domain in its natural labelling.

    Raises:
        PreconditionFailedError: If the domain is not hybrid or needed relabeling
        NotRegularError: If the domain is not regular
    """
    report = recover_thresholds(domain, path_cap)
    if report.classification is not Classification.HYBRID or report.relabeled:
        raise PreconditionFailedError(
            f"Thresholds are only defined for hybrid domains; the domain is "
            f"{report.classification.value}"
        )
    assert report.k_lo is not None and report.k_hi is not None
    return report.k_lo, report.k_hi


@dataclass
class AuditRuleQuery:
    """Query to audit a ballot rule on a domain.

    n defaults to the number of voters in the ballots file. Thresholds for
    the middle-interval check come from the query, then the ballots file,
    then threshold recovery on the domain.
    """

    ballots: BallotsFile
    domain: Domain
    checks: Sequence[AuditCheck]
    n: int | None = None
    thresholds: tuple[int, int] | None = None


@dataclass
class AuditRuleResult:
    """Reports in the order the checks were requested."""

    reports: list[AuditReport] = field(default_factory=list)
    thresholds: tuple[int, int] | None = None

    @property
    def holds(self) -> bool:
        return all(self.reports)


class AuditRuleHandler:
    """Handler running the brute-force property checks."""

    def __init__(self, auditor: MechanismAuditor, max_voters: int = MAX_VOTERS) -> None:
        """Initialize handler with dependencies.

        Args:
            auditor: Auditor carrying the budget, worker count and path cap
            max_voters: Largest accepted number of voters
        """
        self._auditor = auditor
        self._max_voters = max_voters

    def handle(self, query: AuditRuleQuery) -> AuditRuleResult:
        """Handle the audit rule query.

        Raises:
            MalformedInputError: If n or m disagree between ballots and domain
            BudgetExceededError: If a scan would exceed the budget
            PreconditionFailedError: If a check's preconditions fail
        """
        rule = build_rule(query.ballots, self._max_voters)
        n = query.n or query.ballots.n
        if n != query.ballots.n or query.domain.m != query.ballots.m:
            raise MalformedInputError(
                f"Ballots for n={query.ballots.n}, m={query.ballots.m} cannot be audited "
                f"with n={n} on a domain over {query.domain.m} alternatives"
            )
        thresholds = query.thresholds or query.ballots.thresholds
        if AuditCheck.RD_ON_MIDDLE in query.checks and thresholds is None:
            thresholds = hybrid_thresholds(query.domain, self._auditor.path_cap)

        log = logger.bind(**bind_problem(n=n, m=query.domain.m, rule=rule.name))
        log.info("Audit started", checks=[c.value for c in query.checks])
        reports = self._auditor.run(query.checks, rule, query.domain, n, thresholds)
        for report in reports:
            log.info(
                "Check finished",
                check=report.check.value,
                holds=report.holds,
                profiles=report.profiles_examined,
                tops_only=report.tops_only_reduction,
                seconds=round(report.elapsed_seconds, 3),
            )
        return AuditRuleResult(reports, thresholds)


@dataclass
class SampledAuditQuery:
    """Query to audit randomly drawn monotone ballots that violate the CRD condition."""

    domain: Domain
    n: int
    samples: int
    seed: int
    thresholds: tuple[int, int] | None = None


class SampledAuditHandler:
    """Handler for the sampled strategy-proofness audit."""

    def __init__(self, auditor: MechanismAuditor) -> None:
        """Initialize handler.

        Args:
            auditor: Auditor used for every sampled table
        """
        self._auditor = auditor

    def handle(self, query: SampledAuditQuery) -> SampledAuditReport:
        """Handle the sampled audit query."""
        k_lo, k_hi = query.thresholds or hybrid_thresholds(query.domain, self._auditor.path_cap)
        log = logger.bind(**bind_problem(n=query.n, m=query.domain.m, thresholds=[k_lo, k_hi]))
        report = self._auditor.audit_sampled_ballots(
            query.domain, query.n, k_lo, k_hi, query.samples, query.seed
        )
        for ballots in report.findings:
            log.warning(
                "finding",
                detail="strategy-proof ballots without the CRD condition",
                ballots={str(s): lottery.to_strings() for s, lottery in enumerate(ballots.table)},
            )
        log.info(
            "Sampled audit finished",
            samples=report.samples,
            skipped=report.skipped,
            failures=report.sp_failures,
            share=report.failure_share,
        )
        return report
