"""Per-run configuration built from parsed arguments and settings."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from src.domain.constants import AuditCheck, DomainFamily
from src.domain.exceptions.domain_exceptions import (
    BudgetExceededError,
    EnumerationOverflowError,
    MalformedInputError,
)
from src.infrastructure.config import Settings

DEFAULT_CHECKS = "sp,unanimity,topsonly,anon"
SAMPLE_FROM_SETTINGS = "settings"


def parse_int_list(text: str, what: str) -> tuple[int, ...]:
    """Parse "2,4,4" into integers.

    Raises:
        MalformedInputError: If an entry is not an integer
    """
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise MalformedInputError(f"{what} must be comma-separated integers, got {text!r}") from e


def parse_pair(text: str, what: str) -> tuple[int, int]:
    values = parse_int_list(text, what)
    if len(values) != 2:
        raise MalformedInputError(f"{what} must be two integers, got {text!r}")
    return values[0], values[1]


def parse_orders(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse semicolon-separated orders, e.g. "1,2,3,4;2,1,3,4"."""
    return tuple(parse_int_list(chunk, "--orders") for chunk in text.split(";") if chunk.strip())


@dataclass(frozen=True)
class RunConfig:
    """Everything one command needs.

    Flags override settings; caps come from settings.
    """

    command: str
    action: str
    domain_path: Path | None = None
    ballots_path: Path | None = None
    output: Path | None = None
    dot: Path | None = None
    family: DomainFamily | None = None
    m: int | None = None
    k_lo: int | None = None
    k_hi: int | None = None
    orders: tuple[tuple[int, ...], ...] | None = None
    threshold: int | None = None
    n: int | None = None
    tops: tuple[int, ...] | None = None
    checks: tuple[AuditCheck, ...] = ()
    thresholds: tuple[int, int] | None = None
    sample: int | None = None
    seed: int = 0
    jobs: int = 1
    budget: int = 1
    path_cap: int = 1
    max_generator_m: int = 8
    max_voters: int = 16
    decimal: bool = False
    verify: bool = True

    @property
    def subcommand(self) -> str:
        return f"{self.command} {self.action}"

    @classmethod
    def from_args(cls, args: argparse.Namespace, settings: Settings) -> "RunConfig":
        """Merge parsed arguments over settings and enforce the caps.

        Raises:
            MalformedInputError: If a value is unparsable or out of range
            EnumerationOverflowError: If m exceeds the generator cap
            BudgetExceededError: If n exceeds the voter cap
        """
        opts = vars(args)
        budget = settings.budget if opts.get("budget") is None else opts["budget"]
        jobs = settings.jobs if opts.get("jobs") is None else opts["jobs"]
        if budget < 1 or jobs < 1:
            raise MalformedInputError("--budget and --jobs must be positive")
        sample = opts.get("sample")
        if sample == SAMPLE_FROM_SETTINGS:
            sample = settings.sample_count
        if sample is not None and sample < 1:
            raise MalformedInputError("--sample must be positive")

        m = opts.get("m")
        if m is not None and m > settings.max_generator_m:
            raise EnumerationOverflowError(
                f"m={m} exceeds the generator cap of {settings.max_generator_m}"
            )
        n = opts.get("n")
        if n is not None and n > settings.max_voters:
            raise BudgetExceededError(f"n={n} exceeds the voter cap of {settings.max_voters}")

        family = opts.get("family")
        checks = opts.get("checks")
        try:
            parsed_family = DomainFamily(family) if family else None
            parsed_checks = tuple(AuditCheck.parse_list(checks or DEFAULT_CHECKS))
        except ValueError as e:
            raise MalformedInputError(str(e)) from e

        domain_path = opts.get("domain")
        domain_file = opts.get("domain_file")
        if None not in (domain_path, domain_file) and domain_path != domain_file:
            raise MalformedInputError(
                f"Conflicting domain files: --domain {domain_path} and {domain_file}"
            )

        seed = opts.get("seed")
        thresholds = opts.get("thresholds")
        return cls(
            command=args.command,
            action=args.action,
            domain_path=domain_path or domain_file,
            ballots_path=opts.get("ballots"),
            output=opts.get("output"),
            dot=opts.get("dot"),
            family=parsed_family,
            m=m,
            k_lo=opts.get("klo"),
            k_hi=opts.get("khi"),
            orders=parse_orders(opts.get("orders")) if opts.get("orders") else None,
            threshold=opts.get("threshold"),
            n=n,
            tops=parse_int_list(opts.get("tops"), "--tops") if opts.get("tops") else None,
            checks=parsed_checks,
            thresholds=parse_pair(thresholds, "--thresholds") if thresholds else None,
            sample=sample,
            seed=settings.seed if seed is None else seed,
            jobs=jobs,
            budget=budget,
            path_cap=settings.path_cap,
            max_generator_m=settings.max_generator_m,
            max_voters=settings.max_voters,
            decimal=bool(opts.get("decimal")),
            verify=not opts.get("no_verify"),
        )

    def require_domain(self) -> Path:
        if self.domain_path is None:
            raise MalformedInputError(f"{self.subcommand} needs a domain file or --domain")
        return self.domain_path

    def require_ballots(self) -> Path:
        if self.ballots_path is None:
            raise MalformedInputError(f"{self.subcommand} needs --ballots")
        return self.ballots_path
