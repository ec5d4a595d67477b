"""Domain-level constants.

This module contains enums and constants that name core concepts and are
independent of infrastructure or presentation concerns.
"""

from enum import Enum

DEFAULT_PATH_CAP = 1_000_000
DEFAULT_BUDGET = 1_000_000_000
MAX_GENERATOR_M = 8


class DomainFamily(str, Enum):
    """Preference-domain families the generators can build."""

    COMPLETE = "complete"
    SINGLE_PEAKED = "single-peaked"
    HYBRID = "hybrid"
    MULTIPLE_SINGLE_PEAKED = "multiple-single-peaked"
    SEMI_SINGLE_PEAKED = "semi-single-peaked"


class Classification(str, Enum):
    """Outcome of threshold recovery on a regular domain."""

    SINGLE_PEAKED = "SinglePeaked"
    HYBRID = "Hybrid"
    NOT_HYBRID_STAR = "NotHybridStar"


class AuditCheck(str, Enum):
    """Mechanism properties the auditor can verify.

    Values match the names accepted by the command line.
    """

    UNANIMITY = "unanimity"
    STRATEGY_PROOFNESS = "sp"
    LOCAL_STRATEGY_PROOFNESS = "localsp"
    TOPS_ONLY = "topsonly"
    ANONYMITY = "anon"
    UNCOMPROMISING = "uncompromising"
    RD_ON_MIDDLE = "rdmiddle"

    @classmethod
    def parse_list(cls, text: str) -> list["AuditCheck"]:
        """Parse a comma-separated check list.

        Args:
            text: e.g. "sp,unanimity,topsonly,anon"

        Returns:
            Checks in the given order, duplicates dropped

        Raises:
            ValueError: If a name is unknown
        """
        checks: list[AuditCheck] = []
        for name in text.split(","):
            check = cls(name.strip().lower())
            if check not in checks:
                checks.append(check)
        return checks


class DecompositionStatus(str, Enum):
    """Outcome of an anonymous decomposition run."""

    DECOMPOSED = "decomposed"
    REJECTED = "rejected"
