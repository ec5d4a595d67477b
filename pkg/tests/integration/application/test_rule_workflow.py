"""Integration tests for auditing and decomposing ballot files."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from src.application.queries.audit_rule import AuditRuleHandler, AuditRuleQuery
from src.application.queries.decompose_rule import DecomposeRuleHandler, DecomposeRuleQuery
from src.application.queries.evaluate_rule import build_rule
from src.application.services.export_service import ReportExporter
from src.domain.constants import AuditCheck, DecompositionStatus
from src.domain.entities.preference_domain import Domain
from src.domain.services.rule_evaluation import mixture_to_ballots
from src.domain.services.mechanism_audit import MechanismAuditor
from src.domain.services.rules import FbrRule
from src.domain.value_objects.profile import TopProfile
from src.infrastructure.serialization import BallotsFile, dump_json, load_ballots

pytestmark = pytest.mark.integration


@pytest.fixture
def random_dictatorship_file() -> BallotsFile:
    """Two voters, each dictator with probability one half, over five alternatives."""
    return BallotsFile(
        n=2,
        m=5,
        anonymous=True,
        ballots={
            "0": ["1", "0", "0", "0", "0"],
            "1": ["1/2", "0", "0", "0", "1/2"],
            "2": ["0", "0", "0", "0", "1"],
        },
    )


class TestAuditWorkflow:
    """Audit ballot files end to end."""

    def test_random_dictatorship_passes_every_check(
        self, random_dictatorship_file: BallotsFile, hybrid_5_2_4: Domain
    ) -> None:
        """Random dictatorship is strategy-proof and random dictatorship on the middle."""
        # Arrange
        checks = AuditCheck.parse_list("sp,unanimity,topsonly,anon,rdmiddle")
        handler = AuditRuleHandler(MechanismAuditor())

        # Act
        result = handler.handle(AuditRuleQuery(random_dictatorship_file, hybrid_5_2_4, checks))

        # Assert
        assert result.holds
        assert result.thresholds == (2, 4)
        sp, *_, rd = result.reports
        assert sp.profiles_examined == 25
        assert sp.tops_only_reduction
        assert rd.coefficients == (Fraction(1, 2), Fraction(1, 2))

    def test_report_renders_to_json(
        self, random_dictatorship_file: BallotsFile, hybrid_5_2_4: Domain
    ) -> None:
        """The rendered audit is valid JSON with exact coefficients."""
        result = AuditRuleHandler(MechanismAuditor()).handle(
            AuditRuleQuery(random_dictatorship_file, hybrid_5_2_4, [AuditCheck.RD_ON_MIDDLE])
        )

        data = json.loads(dump_json(ReportExporter().export_audit(result)))

        assert data["checks"][0]["coefficients"] == ["1/2", "1/2"]
        assert data["checks"][0]["profiles_examined"] == 9


class TestDecompositionWorkflow:
    """Decompose an example file and use the components."""

    def test_three_round_decomposition_mixes_back(self, examples_dir: Path) -> None:
        """Components are valid fixed ballot rules that mix back to the file."""
        # Arrange
        document = load_ballots(examples_dir / "anonymous_three_round_ballots.json")

        # Act
        outcome = DecomposeRuleHandler().handle(DecomposeRuleQuery(document, verify=False))

        # Assert
        assert outcome.status is DecompositionStatus.DECOMPOSED
        assert outcome.result is not None
        assert [step.weight for step in outcome.result.trace] == [
            Fraction(1, 6),
            Fraction(1, 12),
            Fraction(1, 12),
        ]
        assert [w for w, _ in outcome.result.components] == [Fraction(1, 12)] * 6 + [
            Fraction(1, 6)
        ] * 3
        assert mixture_to_ballots(outcome.result.components) == document.to_probabilistic()

    def test_components_agree_with_the_rule(self, examples_dir: Path) -> None:
        """Mixing the component outcomes reproduces the social lottery."""
        # Arrange
        document = load_ballots(examples_dir / "anonymous_decomposable_ballots.json")
        rule = build_rule(document)
        outcome = DecomposeRuleHandler().handle(DecomposeRuleQuery(document, verify=False))
        assert outcome.result is not None
        tops = TopProfile((3, 5, 5), 5)

        # Act
        mixed = [Fraction(0)] * 5
        for weight, ballots in outcome.result.components:
            mixed[FbrRule(ballots).choose(tops) - 1] += weight

        # Assert
        assert tuple(mixed) == rule.evaluate_tops(tops).probs

    @pytest.mark.slow
    def test_three_round_decomposition_verifies(self, examples_dir: Path) -> None:
        """Every layer of the verification passes."""
        document = load_ballots(examples_dir / "anonymous_three_round_ballots.json")

        outcome = DecomposeRuleHandler().handle(DecomposeRuleQuery(document))

        assert outcome.verification is not None
        assert outcome.verification.holds
