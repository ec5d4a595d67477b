"""File schemas for domains and ballot tables.

Probabilities are exact: "p/q" strings, decimal strings and integers are
all read with Fraction. Ballot keys are coalition bitmasks, or coalition
sizes when the file is marked anonymous.
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from src.domain.entities.preference_domain import Domain
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery

type Probability = str | int | float


def parse_fraction(value: str | int | float) -> Fraction:
    """Read an exact probability.

    Floats are read through their shortest decimal representation.

    Raises:
        ValueError: If the value is not a number
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a probability: {value!r}")
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not an exact probability: {value!r}") from e


class DomainFile(BaseModel):
    """A preference domain on disk."""

    m: int = Field(..., ge=1, description="Number of alternatives")
    prefs: list[list[int]] = Field(..., description="Strict orders, best first")
    family: str | None = Field(default=None, description="Generator family, if generated")

    @model_validator(mode="after")
    def validate_lengths(self) -> "DomainFile":
        """Every preference must rank all m alternatives."""
        for order in self.prefs:
            if sorted(order) != list(range(1, self.m + 1)):
                raise ValueError(f"{order} is not a strict order over a1..a{self.m}")
        return self

    def to_domain(self) -> Domain:
        """Build the domain (duplicates collapse)."""
        return Domain.from_lists(self.prefs)

    @classmethod
    def from_domain(cls, domain: Domain, family: str | None = None) -> "DomainFile":
        return cls(m=domain.m, prefs=domain.to_lists(), family=family)


class BallotsFile(BaseModel):
    """A coalition ballot table on disk."""

    n: int = Field(..., ge=2, le=coalitions.MAX_VOTERS, description="Number of voters")
    m: int = Field(..., ge=3, description="Number of alternatives")
    kind: Literal["probabilistic", "deterministic"] = Field(
        default="probabilistic", description="Lotteries or single alternatives per coalition"
    )
    anonymous: bool = Field(default=False, description="Keys are coalition sizes")
    ballots: dict[str, list[Probability] | int] = Field(
        ..., description="Ballot per coalition bitmask (or size)"
    )
    thresholds: tuple[int, int] | None = Field(default=None, description="(k_lo, k_hi)")

    @field_validator("ballots")
    @classmethod
    def validate_keys(cls, v: dict[str, list[Probability] | int]) -> dict[str, list[Probability] | int]:
        """Keys must be nonnegative integers."""
        for key in v:
            if not key.strip().isdigit():
                raise ValueError(f"Ballot key {key!r} is not a coalition bitmask or size")
        return v

    @model_validator(mode="after")
    def validate_shape(self) -> "BallotsFile":
        """Check that keys cover every coalition (or size) and values fit the kind."""
        expected = self.n + 1 if self.anonymous else 1 << self.n
        keys = {int(k) for k in self.ballots}
        if keys != set(range(expected)):
            raise ValueError(f"Expected ballot keys 0..{expected - 1}, got {sorted(keys)}")
        for key, value in self.ballots.items():
            if self.kind == "deterministic" and not isinstance(value, int):
                raise ValueError(f"Deterministic ballot {key} must be one alternative")
            if self.kind == "probabilistic" and isinstance(value, int):
                raise ValueError(f"Probabilistic ballot {key} must be a list of probabilities")
            if isinstance(value, list) and len(value) != self.m:
                raise ValueError(
                    f"Ballot {key} lists {len(value)} probabilities but the file declares m={self.m}"
                )
            if isinstance(value, int) and not 1 <= value <= self.m:
                raise ValueError(f"Ballot {key} names a{value}, outside a1..a{self.m}")
        return self

    def _by_key(self) -> dict[int, list[Probability] | int]:
        return {int(k): v for k, v in self.ballots.items()}

    def to_probabilistic(self) -> ProbabilisticBallots:
        """Build the probabilistic table; deterministic files become point masses."""
        if self.kind == "deterministic":
            return self.to_deterministic().as_lotteries
        by_key = self._by_key()
        lotteries = {
            key: Lottery(tuple(parse_fraction(p) for p in value))  # type: ignore[union-attr]
            for key, value in by_key.items()
        }
        if self.anonymous:
            return ProbabilisticBallots.from_sizes(self.n, [lotteries[k] for k in range(self.n + 1)])
        return ProbabilisticBallots.from_mapping(self.n, self.m, lotteries)

    def to_deterministic(self) -> DeterministicBallots:
        """Build the deterministic table.

        Raises:
            ValueError: If the file holds lotteries
        """
        if self.kind != "deterministic":
            raise ValueError("The ballots file holds lotteries, not single alternatives")
        by_key = self._by_key()
        if self.anonymous:
            table = tuple(by_key[coalitions.size(s)] for s in coalitions.all_coalitions(self.n))
        else:
            table = tuple(by_key[s] for s in coalitions.all_coalitions(self.n))
        return DeterministicBallots(self.n, self.m, table)  # type: ignore[arg-type]

    @classmethod
    def from_probabilistic(
        cls, ballots: ProbabilisticBallots, thresholds: tuple[int, int] | None = None
    ) -> "BallotsFile":
        return cls(
            n=ballots.n,
            m=ballots.m,
            ballots={str(s): ballots[s].to_strings() for s in coalitions.all_coalitions(ballots.n)},
            thresholds=thresholds,
        )

    @classmethod
    def from_deterministic(cls, ballots: DeterministicBallots) -> "BallotsFile":
        return cls(
            n=ballots.n,
            m=ballots.m,
            kind="deterministic",
            ballots={str(s): ballots[s] for s in coalitions.all_coalitions(ballots.n)},
        )
