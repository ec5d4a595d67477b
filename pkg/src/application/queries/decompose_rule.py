"""Decompose Rule query and handler."""

from dataclasses import dataclass

from src.domain.constants import DecompositionStatus
from src.domain.exceptions.domain_exceptions import (
    MalformedInputError,
    NotPerCapitaMonotoneError,
)
from src.domain.services.ballot_checks import PerCapitaWitness
from src.domain.services.decomposition import (
    DecompositionResult,
    VerificationResult,
    decompose_anonymous,
    verify_decomposition,
)
from src.domain.services.mechanism_audit import MechanismAuditor
from src.infrastructure.logging import bind_problem, get_logger
from src.infrastructure.serialization import BallotsFile

logger = get_logger(__name__)


@dataclass
class DecomposeRuleQuery:
    """Query to split anonymous CRD ballots into weighted fixed ballot rules."""

    ballots: BallotsFile
    thresholds: tuple[int, int] | None = None
    verify: bool = True


@dataclass
class DecomposeRuleResult:
    """Decomposition outcome.

    A rejected run carries the per-capita witness and no result.
    """

    status: DecompositionStatus
    result: DecompositionResult | None = None
    witness: PerCapitaWitness | None = None
    verification: VerificationResult | None = None


class DecomposeRuleHandler:
    """Handler for anonymous decomposition."""

    def __init__(self, auditor: MechanismAuditor | None = None) -> None:
        """Initialize handler.

        Args:
            auditor: Auditor for the per-component verification layer
        """
        self._auditor = auditor or MechanismAuditor()

    def handle(self, query: DecomposeRuleQuery) -> DecomposeRuleResult:
        """Handle the decompose rule query.

        Returns:
            Decomposed result, or a rejection with its witness

        Raises:
            MalformedInputError: If no thresholds are given or stored
            NotAnonymousError: If the ballots depend on voter identity
            NotCrdError: If the CRD condition fails
            InternalInconsistencyError: If verification fails
        """
        thresholds = query.thresholds or query.ballots.thresholds
        if thresholds is None:
            raise MalformedInputError("Decomposition needs --thresholds or thresholds in the file")
        k_lo, k_hi = thresholds
        try:
            ballots = query.ballots.to_probabilistic()
        except ValueError as e:
            raise MalformedInputError(str(e)) from e
        log = logger.bind(**bind_problem(n=ballots.n, m=ballots.m, thresholds=[k_lo, k_hi]))

        try:
            result = decompose_anonymous(ballots, k_lo, k_hi)
        except NotPerCapitaMonotoneError as e:
            log.info("Decomposition rejected", reason=str(e))
            witness = e.witness if isinstance(e.witness, PerCapitaWitness) else None
            return DecomposeRuleResult(DecompositionStatus.REJECTED, witness=witness)

        for index, step in enumerate(result.trace, start=1):
            log.debug(
                "Decomposition round",
                round=index,
                alpha=step.alpha,
                weight=step.weight,
                support=step.total_support,
                terminal=step.terminal,
            )
        verification = None
        if query.verify:
            verification = verify_decomposition(ballots, result, self._auditor)
            if not verification:
                log.error(
                    "Decomposition failed verification",
                    layer=verification.failed_layer,
                    detail=verification.detail,
                )
        log.info(
            "Decomposition finished",
            components=len(result.components),
            rounds=len(result.trace),
        )
        return DecomposeRuleResult(
            DecompositionStatus.DECOMPOSED, result=result, verification=verification
        )
