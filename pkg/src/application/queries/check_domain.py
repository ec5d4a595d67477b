"""Check Domain and Recover Thresholds queries and handlers."""

from dataclasses import dataclass

from src.domain.constants import DEFAULT_PATH_CAP
from src.domain.entities.preference_domain import Domain
from src.domain.services.regularity import RegularityReport, is_regular
from src.domain.services.threshold_recovery import ThresholdReport, recover_thresholds
from src.infrastructure.logging import bind_problem, get_logger

logger = get_logger(__name__)


@dataclass
class CheckDomainQuery:
    """Query to run the regularity checks on a domain."""

    domain: Domain


class CheckDomainHandler:
    """Handler for the minimal-richness, diversity and no-restoration checks."""

    def handle(self, query: CheckDomainQuery) -> RegularityReport:
        """Handle the check domain query.

        Args:
            query: Query holding the domain

        Returns:
            The three checks with their witnesses
        """
        report = is_regular(query.domain)
        logger.info(
            "Domain checked",
            regular=report.is_regular,
            size=len(query.domain),
            **bind_problem(m=query.domain.m),
        )
        return report


@dataclass
class RecoverThresholdsQuery:
    """Query to classify a regular domain and read off its thresholds."""

    domain: Domain
    path_cap: int = DEFAULT_PATH_CAP


class RecoverThresholdsHandler:
    """Handler for threshold recovery."""

    def handle(self, query: RecoverThresholdsQuery) -> ThresholdReport:
        """Handle the recover thresholds query.

        Raises:
            NotRegularError: If the domain is not regular
            EnumerationOverflowError: If vertex paths exceed the cap
        """
        report = recover_thresholds(query.domain, query.path_cap)
        logger.info(
            "Thresholds recovered",
            classification=report.classification.value,
            k_lo=report.k_lo,
            k_hi=report.k_hi,
            paths=report.path_count,
            **bind_problem(m=query.domain.m),
        )
        for note in report.diagnostics:
            logger.debug("Recovery diagnostic", note=note)
        return report
