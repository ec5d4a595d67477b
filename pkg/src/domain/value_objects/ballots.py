"""Coalition-indexed ballot tables for fixed ballot rules."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from src.domain.exceptions.domain_exceptions import (
    DegenerateSizeError,
    InvalidBallotsError,
)
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.alternative import (
    Alternative,
    validate_alternative,
    validate_size,
)
from src.domain.value_objects.coalition import Coalition
from src.domain.value_objects.lottery import ZERO, Lottery
from src.domain.value_objects.profile import validate_voters


def _validate_voter_cap(n: int) -> None:
    validate_voters(n)
    if n > coalitions.MAX_VOTERS:
        raise DegenerateSizeError(
            f"Ballot tables support at most {coalitions.MAX_VOTERS} voters, got n={n}"
        )


@dataclass(frozen=True)
class ProbabilisticBallots:
    """The family (beta_S) of probabilistic ballots, one lottery per coalition.

    Attributes:
        n: Number of voters
        m: Number of alternatives
        table: beta_S at index S (bitmask), 2^n entries
    """

    n: int
    m: int
    table: tuple[Lottery, ...]

    def __post_init__(self) -> None:
        """Validate table completeness and a common m."""
        _validate_voter_cap(self.n)
        validate_size(self.m)
        if len(self.table) != 1 << self.n:
            raise InvalidBallotsError(
                f"Expected {1 << self.n} coalition ballots for n={self.n}, "
                f"got {len(self.table)}"
            )
        if any(lottery.m != self.m for lottery in self.table):
            raise InvalidBallotsError(f"Every ballot must be a lottery over {self.m} alternatives")

    @classmethod
    def from_mapping(
        cls, n: int, m: int, ballots: Mapping[Coalition, Lottery]
    ) -> "ProbabilisticBallots":
        """Build from a coalition-to-lottery mapping that covers every coalition.

        Raises:
            InvalidBallotsError: If a coalition is missing
        """
        missing = [s for s in coalitions.all_coalitions(n) if s not in ballots]
        if missing:
            raise InvalidBallotsError(
                "Missing ballots for coalitions "
                + ", ".join(coalitions.render(s, n) for s in missing)
            )
        return cls(n, m, tuple(ballots[s] for s in coalitions.all_coalitions(n)))

    @classmethod
    def from_sizes(cls, n: int, by_size: Sequence[Lottery]) -> "ProbabilisticBallots":
        """Expand the compact anonymous form: one lottery per coalition size 0..n.

        Raises:
            InvalidBallotsError: If by_size does not have n + 1 entries
        """
        if len(by_size) != n + 1:
            raise InvalidBallotsError(
                f"Anonymous ballots need {n + 1} size-indexed lotteries, got {len(by_size)}"
            )
        m = by_size[0].m
        return cls(
            n,
            m,
            tuple(by_size[coalitions.size(s)] for s in coalitions.all_coalitions(n)),
        )

    def __getitem__(self, coalition: Coalition) -> Lottery:
        """beta_S."""
        return self.table[coalition]

    def of_size(self, k: int) -> Lottery:
        """The ballot of the first coalition with k members."""
        return self.table[(1 << k) - 1]

    @cached_property
    def upper_masses(self) -> tuple[tuple[Fraction, ...], ...]:
        """Tail masses: upper_masses[S][k] = beta_S([a_k, a_m]) for k = 1..m+1.

        Index 0 is unused and equals 1.
        """
        tails = []
        for lottery in self.table:
            row = [ZERO] * (self.m + 2)
            running = ZERO
            for k in range(self.m, 0, -1):
                running += lottery[k]
                row[k] = running
            row[0] = running
            tails.append(tuple(row))
        return tuple(tails)

    def upper_mass(self, coalition: Coalition, k: int) -> Fraction:
        """beta_S([a_k, a_m]) with the empty interval at k = m + 1."""
        return self.upper_masses[coalition][k]

    def lower_mass(self, coalition: Coalition, k: int) -> Fraction:
        """beta_S([a_1, a_k])."""
        return 1 - self.upper_masses[coalition][k + 1]

    def supports(self) -> tuple[frozenset[Alternative], ...]:
        """supp(beta_S) for every coalition."""
        return tuple(lottery.support() for lottery in self.table)

    def total_support(self) -> int:
        """Sum of support sizes over all coalitions."""
        return sum(len(s) for s in self.supports())


@dataclass(frozen=True)
class DeterministicBallots:
    """The family (b_S) of deterministic ballots of a fixed ballot rule.

    Attributes:
        n: Number of voters
        m: Number of alternatives
        table: b_S at index S (bitmask), 2^n entries
    """

    n: int
    m: int
    table: tuple[Alternative, ...]

    def __post_init__(self) -> None:
        """Validate table completeness and alternative range."""
        _validate_voter_cap(self.n)
        validate_size(self.m)
        if len(self.table) != 1 << self.n:
            raise InvalidBallotsError(
                f"Expected {1 << self.n} coalition ballots for n={self.n}, "
                f"got {len(self.table)}"
            )
        for a in self.table:
            validate_alternative(a, self.m)

    @classmethod
    def from_mapping(
        cls, n: int, m: int, ballots: Mapping[Coalition, Alternative]
    ) -> "DeterministicBallots":
        """Build from a coalition-to-alternative mapping that covers every coalition."""
        missing = [s for s in coalitions.all_coalitions(n) if s not in ballots]
        if missing:
            raise InvalidBallotsError(
                "Missing ballots for coalitions "
                + ", ".join(coalitions.render(s, n) for s in missing)
            )
        return cls(n, m, tuple(ballots[s] for s in coalitions.all_coalitions(n)))

    def __getitem__(self, coalition: Coalition) -> Alternative:
        """b_S."""
        return self.table[coalition]

    @cached_property
    def as_lotteries(self) -> ProbabilisticBallots:
        """The degenerate probabilistic table beta_S = e_{b_S}."""
        return ProbabilisticBallots(
            self.n, self.m, tuple(Lottery.point_mass(a, self.m) for a in self.table)
        )

