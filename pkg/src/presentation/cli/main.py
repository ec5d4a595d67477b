"""The ballotcraft command line.

Subcommands: ``domain gen|check|thresholds`` and ``rule eval|audit|decompose``.
Command output is JSON on stdout (or --output); logs go to stderr.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from src.application.queries.audit_rule import (
    AuditRuleHandler,
    AuditRuleQuery,
    SampledAuditHandler,
    SampledAuditQuery,
)
from src.application.queries.check_domain import (
    CheckDomainHandler,
    CheckDomainQuery,
    RecoverThresholdsHandler,
    RecoverThresholdsQuery,
)
from src.application.queries.decompose_rule import DecomposeRuleHandler, DecomposeRuleQuery
from src.application.queries.evaluate_rule import EvaluateRuleHandler, EvaluateRuleQuery
from src.application.queries.generate_domain import GenerateDomainHandler, GenerateDomainQuery
from src.application.services.export_service import ReportExporter
from src.domain.constants import DecompositionStatus, DomainFamily
from src.domain.exceptions.domain_exceptions import MalformedInputError
from src.domain.services.mechanism_audit import MechanismAuditor
from src.infrastructure.config import get_settings
from src.infrastructure.logging import (
    bind_run_context,
    clear_run_context,
    configure_logging,
    get_logger,
)
from src.infrastructure.serialization import dump_json, load_ballots, load_domain, write_json
from src.presentation.cli.error_handler import ErrorHandler, ExitCode
from src.presentation.cli.run_config import SAMPLE_FROM_SETTINGS, RunConfig

logger = get_logger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors surface as malformed input."""

    def error(self, message: str) -> NoReturn:
        raise MalformedInputError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="ballotcraft",
        description="Hybrid preference domains and probabilistic fixed ballot rules.",
    )
    parser.add_argument("--log-level", help="Override BALLOTCRAFT_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    domain = commands.add_parser("domain", help="Generate and analyse preference domains")
    domain_actions = domain.add_subparsers(dest="action", required=True)

    gen = domain_actions.add_parser("gen", help="Enumerate a domain family")
    gen.add_argument("--family", required=True, choices=[f.value for f in DomainFamily])
    gen.add_argument("--m", type=int, help="Number of alternatives")
    gen.add_argument("--klo", type=int, help="Left threshold (hybrid)")
    gen.add_argument("--khi", type=int, help="Right threshold (hybrid)")
    gen.add_argument("--orders", help='Reference orders, e.g. "1,2,3,4;2,1,3,4"')
    gen.add_argument("--threshold", type=int, help="Threshold (semi-single-peaked)")
    gen.add_argument("--output", type=Path)

    check = domain_actions.add_parser("check", help="Minimal richness, diversity, no-restoration")
    check.add_argument("domain_file", nargs="?", type=Path, help="Domain file (or --domain)")
    check.add_argument("--domain", type=Path)
    check.add_argument("--output", type=Path)

    thresholds = domain_actions.add_parser("thresholds", help="Recover hybrid thresholds")
    thresholds.add_argument("domain_file", nargs="?", type=Path, help="Domain file (or --domain)")
    thresholds.add_argument("--domain", type=Path)
    thresholds.add_argument("--dot", type=Path, help="Write the strong-connectedness graph")
    thresholds.add_argument("--output", type=Path)

    rule = commands.add_parser("rule", help="Evaluate, audit and decompose ballot rules")
    rule_actions = rule.add_subparsers(dest="action", required=True)

    evaluate = rule_actions.add_parser("eval", help="Social lottery at a top profile")
    evaluate.add_argument("--ballots", type=Path, required=True)
    evaluate.add_argument("--tops", required=True, help="Peaks per voter, e.g. 2,4")
    evaluate.add_argument("--decimal", action="store_true")
    evaluate.add_argument("--output", type=Path)

    audit = rule_actions.add_parser("audit", help="Brute-force property checks")
    audit.add_argument("--ballots", type=Path)
    audit.add_argument("--domain", type=Path, required=True)
    audit.add_argument("--n", type=int)
    audit.add_argument("--checks", help="e.g. sp,unanimity,topsonly,anon")
    audit.add_argument("--thresholds", help="k_lo,k_hi for rdmiddle or sampling")
    audit.add_argument(
        "--sample",
        type=int,
        nargs="?",
        const=SAMPLE_FROM_SETTINGS,
        help="Audit K sampled tables without the CRD condition (default BALLOTCRAFT_SAMPLE_COUNT)",
    )
    audit.add_argument("--seed", type=int)
    audit.add_argument("--jobs", type=int)
    audit.add_argument("--budget", type=int)
    audit.add_argument("--decimal", action="store_true")
    audit.add_argument("--output", type=Path)

    decompose = rule_actions.add_parser("decompose", help="Split anonymous ballots into FBRs")
    decompose.add_argument("--ballots", type=Path, required=True)
    decompose.add_argument("--thresholds", help="k_lo,k_hi")
    decompose.add_argument("--no-verify", action="store_true")
    decompose.add_argument("--budget", type=int)
    decompose.add_argument("--decimal", action="store_true")
    decompose.add_argument("--output", type=Path)
    return parser


def _emit(data: Any, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(dump_json(data))
    else:
        write_json(data, output)


def cmd_domain(config: RunConfig) -> ExitCode:
    """Run ``domain gen|check|thresholds``."""
    exporter = ReportExporter()
    match config.action:
        case "gen":
            assert config.family is not None
            domain = GenerateDomainHandler(config.max_generator_m).handle(
                GenerateDomainQuery(
                    config.family,
                    m=config.m,
                    k_lo=config.k_lo,
                    k_hi=config.k_hi,
                    orders=config.orders,
                    threshold=config.threshold,
                )
            )
            _emit(exporter.export_domain(domain, config.family.value), config.output)
            return ExitCode.OK
        case "check":
            domain = load_domain(config.require_domain()).to_domain()
            report = CheckDomainHandler().handle(CheckDomainQuery(domain))
            _emit(exporter.export_regularity(report), config.output)
            return ExitCode.OK if report.is_regular else ExitCode.VIOLATION
        case "thresholds":
            domain = load_domain(config.require_domain()).to_domain()
            recovered = RecoverThresholdsHandler().handle(
                RecoverThresholdsQuery(domain, config.path_cap)
            )
            if config.dot is not None:
                config.dot.write_text(recovered.graph.to_dot(), encoding="utf-8")
            _emit(exporter.export_thresholds(recovered), config.output)
            return ExitCode.OK
    raise MalformedInputError(f"Unknown action {config.subcommand}")


def cmd_rule(config: RunConfig) -> ExitCode:
    """Run ``rule eval|audit|decompose``."""
    exporter = ReportExporter(decimal=config.decimal)
    auditor = MechanismAuditor(config.budget, config.jobs, config.path_cap)
    match config.action:
        case "eval":
            assert config.tops is not None
            result = EvaluateRuleHandler(config.max_voters).handle(
                EvaluateRuleQuery(load_ballots(config.require_ballots()), config.tops)
            )
            _emit(exporter.export_evaluation(result), config.output)
            return ExitCode.OK
        case "audit" if config.sample is not None:
            if config.n is None:
                raise MalformedInputError("A sampled audit needs --n")
            domain = load_domain(config.require_domain()).to_domain()
            sampled = SampledAuditHandler(auditor).handle(
                SampledAuditQuery(domain, config.n, config.sample, config.seed, config.thresholds)
            )
            _emit(exporter.export_sampled(sampled), config.output)
            return ExitCode.OK
        case "audit":
            domain = load_domain(config.require_domain()).to_domain()
            audited = AuditRuleHandler(auditor, config.max_voters).handle(
                AuditRuleQuery(
                    load_ballots(config.require_ballots()),
                    domain,
                    config.checks,
                    n=config.n,
                    thresholds=config.thresholds,
                )
            )
            _emit(exporter.export_audit(audited), config.output)
            return ExitCode.OK if audited.holds else ExitCode.VIOLATION
        case "decompose":
            document = load_ballots(config.require_ballots())
            outcome = DecomposeRuleHandler(auditor).handle(
                DecomposeRuleQuery(document, config.thresholds, config.verify)
            )
            _emit(exporter.export_decomposition(outcome, document.n), config.output)
            if outcome.status is DecompositionStatus.REJECTED:
                return ExitCode.VIOLATION
            if outcome.verification is not None and not outcome.verification:
                return ExitCode.INTERNAL
            return ExitCode.OK
    raise MalformedInputError(f"Unknown action {config.subcommand}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``ballotcraft`` console script.

    Returns:
        0 when everything holds, 1 when a property violation was found,
        2 when a cap or budget was exceeded, 3 on malformed input
    """
    settings = get_settings()
    handler = ErrorHandler()
    configure_logging(settings.log_level, settings.log_format)
    try:
        args = build_parser().parse_args(argv)
    except MalformedInputError as e:
        sys.stderr.write(handler.message(e) + "\n")
        return int(handler.handle_error(e))
    if args.log_level:
        configure_logging(args.log_level.lower(), settings.log_format)

    bind_run_context(f"{args.command} {args.action}")
    try:
        config = RunConfig.from_args(args, settings)
        logger.info("Command started", subcommand=config.subcommand)
        code = cmd_domain(config) if config.command == "domain" else cmd_rule(config)
        logger.info("Command finished", exit_code=int(code))
        return int(code)
    except Exception as e:
        sys.stderr.write(handler.message(e) + "\n")
        return int(handler.handle_error(e))
    finally:
        clear_run_context()


if __name__ == "__main__":
    sys.exit(main())
