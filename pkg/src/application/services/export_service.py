"""Service for rendering results as JSON reports."""

from fractions import Fraction
from typing import Any

from src.application.queries.audit_rule import AuditRuleResult
from src.application.queries.decompose_rule import DecomposeRuleResult
from src.application.queries.evaluate_rule import EvaluateRuleResult
from src.domain.entities.preference_domain import Domain
from src.domain.services.ballot_checks import PerCapitaWitness
from src.domain.services.decomposition import DecompositionRound
from src.domain.services.mechanism_audit import (
    AuditReport,
    Manipulation,
    SampledAuditReport,
    Witness,
)
from src.domain.services.regularity import RegularityReport
from src.domain.services.threshold_recovery import ThresholdReport
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.ballots import DeterministicBallots, ProbabilisticBallots
from src.domain.value_objects.lottery import Lottery
from src.domain.value_objects.profile import Profile, TopProfile

type Json = dict[str, Any]


class ReportExporter:
    """Turns query results into JSON-ready dictionaries.

    Probabilities are exact "p/q" strings; with decimal output enabled every
    lottery also carries "~0.xxxx" approximations.
    """

    def __init__(self, decimal: bool = False, places: int = 4) -> None:
        """Initialize exporter.

        Args:
            decimal: Add decimal approximations next to exact lotteries
            places: Digits after the point in approximations
        """
        self._decimal = decimal
        self._places = places

    def fraction(self, value: Fraction) -> str:
        return str(value)

    def lottery(self, lottery: Lottery) -> Json:
        data: Json = {"probabilities": lottery.to_strings()}
        if self._decimal:
            data["approx"] = [f"~{float(p):.{self._places}f}" for p in lottery.probs]
        return data

    def export_domain(self, domain: Domain, family: str | None = None) -> Json:
        return {
            "m": domain.m,
            "size": len(domain),
            "family": family,
            "prefs": domain.to_lists(),
        }

    def export_regularity(self, report: RegularityReport) -> Json:
        """Render the three regularity checks with their witnesses."""
        diverse = report.diverse.witness
        restoration = report.no_restoration.counterexample
        return {
            "regular": report.is_regular,
            "minimally_rich": {
                "holds": report.minimally_rich.holds,
                "missing_peaks": list(report.minimally_rich.missing_peaks),
            },
            "diverse": {
                "holds": report.diverse.holds,
                "witness": [p.to_list() for p in diverse] if diverse else None,
            },
            "no_restoration": {
                "holds": report.no_restoration.holds,
                "counterexample": {
                    "source": restoration.source.to_list(),
                    "target": restoration.target.to_list(),
                    "pair": list(restoration.pair),
                }
                if restoration
                else None,
            },
        }

    def export_thresholds(self, report: ThresholdReport) -> Json:
        return {
            "classification": report.classification.value,
            "klo": report.k_lo,
            "khi": report.k_hi,
            "path_count": report.path_count,
            "prefix": list(report.common_prefix),
            "suffix": list(report.common_suffix),
            "continuation_check": report.continuation_check,
            "relabeling": list(report.relabeling) if report.relabeling else None,
            "diagnostics": list(report.diagnostics),
        }

    def export_evaluation(self, result: EvaluateRuleResult) -> Json:
        return {"lottery": self.lottery(result.lottery), "choice": result.choice}

    def _profile(self, profile: Profile | TopProfile) -> list[Any]:
        if isinstance(profile, TopProfile):
            return list(profile.tops)
        return [p.to_list() for p in profile.prefs]

    def _manipulation(self, manipulation: Manipulation) -> Json:
        return {
            "profile": self._profile(manipulation.profile),
            "voter": manipulation.voter,
            "sincere": manipulation.sincere.to_list(),
            "misreport": manipulation.misreport.to_list(),
            "truthful": self.lottery(manipulation.truthful),
            "manipulated": self.lottery(manipulation.manipulated),
            "prefix": manipulation.prefix,
        }

    def _witness(self, witness: Witness) -> Json:
        return {
            "description": witness.description,
            "profiles": [self._profile(p) for p in witness.profiles],
            "lotteries": [self.lottery(lottery) for lottery in witness.lotteries],
        }

    def export_audit_report(self, report: AuditReport) -> Json:
        """Render one check; wall time stays in the logs."""
        return {
            "check": report.check.value,
            "holds": report.holds,
            "profiles_examined": report.profiles_examined,
            "tops_only_reduction": report.tops_only_reduction,
            "counterexample": self._manipulation(report.counterexample)
            if report.counterexample
            else None,
            "witness": self._witness(report.witness) if report.witness else None,
            "coefficients": [self.fraction(e) for e in report.coefficients]
            if report.coefficients is not None
            else None,
        }

    def export_audit(self, result: AuditRuleResult) -> Json:
        return {
            "holds": result.holds,
            "thresholds": list(result.thresholds) if result.thresholds else None,
            "checks": [self.export_audit_report(r) for r in result.reports],
        }

    def export_ballots(self, ballots: ProbabilisticBallots | DeterministicBallots) -> Json:
        """Ballots in the ballots-file layout, keyed by coalition bitmask.

        The result loads back as a ballots file.
        """
        n = ballots.n
        table: Json
        if isinstance(ballots, DeterministicBallots):
            kind = "deterministic"
            table = {str(s): ballots[s] for s in coalitions.all_coalitions(n)}
        else:
            kind = "probabilistic"
            table = {str(s): ballots[s].to_strings() for s in coalitions.all_coalitions(n)}
        return {"n": n, "m": ballots.m, "kind": kind, "ballots": table}

    def export_sampled(self, report: SampledAuditReport) -> Json:
        return {
            "samples": report.samples,
            "seed": report.seed,
            "skipped": report.skipped,
            "sp_failures": report.sp_failures,
            "failure_share": self.fraction(report.failure_share),
            "findings": [self.export_ballots(b) for b in report.findings],
        }

    def export_per_capita_witness(self, witness: PerCapitaWitness, n: int) -> Json:
        return {
            "smaller": coalitions.render(witness.smaller, n),
            "larger": coalitions.render(witness.larger, n),
            "side": witness.side,
            "alternative": witness.alternative,
            "larger_per_capita": self.fraction(witness.larger_per_capita),
            "smaller_per_capita": self.fraction(witness.smaller_per_capita),
        }

    def _round(self, step: DecompositionRound) -> Json:
        return {
            "alpha": self.fraction(step.alpha),
            "weight": self.fraction(step.weight),
            "total_support": step.total_support,
            "terminal": step.terminal,
        }

    def export_decomposition(self, outcome: DecomposeRuleResult, n: int) -> Json:
        """Render a decomposition or its rejection.

        Args:
            outcome: Handler result
            n: Number of voters, for rendering coalitions

        Returns:
            Status with components and trace, or the rejection witness
        """
        data: Json = {"status": outcome.status.value}
        if outcome.witness is not None:
            data["witness"] = self.export_per_capita_witness(outcome.witness, n)
        if outcome.result is not None:
            data["thresholds"] = [outcome.result.k_lo, outcome.result.k_hi]
            data["components"] = [
                {"weight": self.fraction(w), **self.export_ballots(family)}
                for w, family in outcome.result.components
            ]
            data["trace"] = [self._round(step) for step in outcome.result.trace]
        if outcome.verification is not None:
            data["verification"] = {
                "holds": outcome.verification.holds,
                "failed_layer": outcome.verification.failed_layer,
                "detail": outcome.verification.detail,
            }
        return data
