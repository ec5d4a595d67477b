"""Integration tests for generating, storing and classifying domains."""

import json
from pathlib import Path

import pytest

from src.application.queries.check_domain import (
    CheckDomainHandler,
    CheckDomainQuery,
    RecoverThresholdsHandler,
    RecoverThresholdsQuery,
)
from src.application.queries.generate_domain import GenerateDomainHandler, GenerateDomainQuery
from src.application.services.export_service import ReportExporter
from src.domain.constants import Classification, DomainFamily
from src.domain.entities.preference_domain import Domain
from src.infrastructure.serialization import DomainFile, load_domain, write_json

pytestmark = pytest.mark.integration


class TestDomainWorkflow:
    """Generate a domain, store it, load it back and classify it."""

    def test_two_axis_domain_is_hybrid(self, tmp_path: Path) -> None:
        """Two single-peaked axes give a (2,5)-hybrid domain after a file round trip."""
        # Arrange
        domain = GenerateDomainHandler().handle(
            GenerateDomainQuery(
                DomainFamily.MULTIPLE_SINGLE_PEAKED,
                orders=[[1, 2, 3, 4, 5, 6], [1, 2, 4, 3, 5, 6]],
            )
        )
        path = tmp_path / "domain.json"
        write_json(DomainFile.from_domain(domain, "multiple-single-peaked").model_dump(), path)

        # Act
        loaded = load_domain(path).to_domain()
        regularity = CheckDomainHandler().handle(CheckDomainQuery(loaded))
        report = RecoverThresholdsHandler().handle(RecoverThresholdsQuery(loaded))

        # Assert
        assert loaded == domain
        assert regularity.is_regular
        assert report.classification is Classification.HYBRID
        assert (report.k_lo, report.k_hi) == (2, 5)

    def test_generated_hybrid_domains_recover_their_thresholds(self) -> None:
        """Recovery inverts generation for interior thresholds."""
        handler = GenerateDomainHandler()

        for k_lo, k_hi in [(1, 4), (2, 4), (2, 5), (3, 6)]:
            domain = handler.handle(
                GenerateDomainQuery(DomainFamily.HYBRID, m=6, k_lo=k_lo, k_hi=k_hi)
            )

            report = RecoverThresholdsHandler().handle(RecoverThresholdsQuery(domain))

            assert report.classification is Classification.HYBRID
            assert (report.k_lo, report.k_hi) == (k_lo, k_hi)

    def test_threshold_report_is_json_ready(self, hybrid_5_2_4: Domain, tmp_path: Path) -> None:
        """The exported report survives a JSON round trip."""
        # Arrange
        report = RecoverThresholdsHandler().handle(RecoverThresholdsQuery(hybrid_5_2_4))
        path = tmp_path / "thresholds.json"

        # Act
        write_json(ReportExporter().export_thresholds(report), path)

        # Assert
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["classification"] == "Hybrid"
        assert data["diagnostics"] == []
