"""Generate Domain query and handler."""

from collections.abc import Sequence
from dataclasses import dataclass

from src.domain.constants import MAX_GENERATOR_M, DomainFamily
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    EnumerationOverflowError,
    MalformedInputError,
)
from src.domain.services.domain_generators import (
    gen_complete,
    gen_hybrid,
    gen_multiple_single_peaked,
    gen_semi_single_peaked,
    gen_single_peaked,
)
from src.infrastructure.logging import bind_problem, get_logger

logger = get_logger(__name__)


@dataclass
class GenerateDomainQuery:
    """Query to enumerate one preference-domain family.

    Family-specific parameters are only read by the family that needs them.
    """

    family: DomainFamily
    m: int | None = None
    k_lo: int | None = None
    k_hi: int | None = None
    orders: Sequence[Sequence[int]] | None = None
    threshold: int | None = None


class GenerateDomainHandler:
    """Handler that builds a domain from its family and parameters."""

    def __init__(self, max_m: int = MAX_GENERATOR_M) -> None:
        """Initialize handler with the generator cap.

        Args:
            max_m: Largest number of alternatives to enumerate
        """
        self._max_m = max_m

    def handle(self, query: GenerateDomainQuery) -> Domain:
        """Handle the generate domain query.

        Args:
            query: Family and parameters

        Returns:
            The generated domain

        Raises:
            MalformedInputError: If a parameter the family needs is missing
            EnumerationOverflowError: If m exceeds the configured cap
        """
        m = query.m
        if query.family is DomainFamily.MULTIPLE_SINGLE_PEAKED and query.orders:
            m = len(query.orders[0])
        if m is None:
            raise MalformedInputError(f"Family {query.family.value} needs --m")
        if m > self._max_m:
            raise EnumerationOverflowError(f"m={m} exceeds the generator cap of {self._max_m}")

        match query.family:
            case DomainFamily.COMPLETE:
                domain = gen_complete(m)
            case DomainFamily.SINGLE_PEAKED:
                domain = gen_single_peaked(m)
            case DomainFamily.HYBRID:
                if query.k_lo is None or query.k_hi is None:
                    raise MalformedInputError("The hybrid family needs --klo and --khi")
                domain = gen_hybrid(m, query.k_lo, query.k_hi)
            case DomainFamily.MULTIPLE_SINGLE_PEAKED:
                if not query.orders:
                    raise MalformedInputError("The multiple-single-peaked family needs --orders")
                domain = gen_multiple_single_peaked(query.orders)
            case DomainFamily.SEMI_SINGLE_PEAKED:
                if query.threshold is None:
                    raise MalformedInputError("The semi-single-peaked family needs --threshold")
                domain = gen_semi_single_peaked(m, query.threshold)

        logger.info(
            "Domain generated",
            family=query.family.value,
            size=len(domain),
            **bind_problem(m=m),
        )
        return domain
