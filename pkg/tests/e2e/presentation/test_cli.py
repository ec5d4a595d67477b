"""End-to-end tests for the ballotcraft command line."""

import json
from pathlib import Path
from typing import Any

import pytest

from src.domain.entities.preference_domain import Domain
from src.domain.services.domain_generators import gen_hybrid
from src.infrastructure.serialization import DomainFile
from src.presentation.cli.main import main

pytestmark = pytest.mark.e2e


def write_domain(path: Path, domain: Domain) -> Path:
    path.write_text(json.dumps(DomainFile.from_domain(domain).model_dump()), encoding="utf-8")
    return path


def run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, Any]:
    """Run the command and parse its stdout (None when empty)."""
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestDomainCommands:
    """Test domain gen, check and thresholds."""

    def test_gen_prints_domain(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Generated domains are printed as JSON."""
        # Act
        code, data = run(
            ["domain", "gen", "--family", "hybrid", "--m", "4", "--klo", "2", "--khi", "4"],
            capsys,
        )

        # Assert
        assert code == 0
        assert data["family"] == "hybrid"
        assert data["size"] == len(gen_hybrid(4, 2, 4))

    def test_gen_then_check(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A generated file feeds the regularity check."""
        # Arrange
        path = tmp_path / "sp.json"
        assert main(["domain", "gen", "--family", "single-peaked", "--m", "5", "--output", str(path)]) == 0
        capsys.readouterr()

        # Act
        code, data = run(["domain", "check", "--domain", str(path)], capsys)

        # Assert
        assert code == 0
        assert data["regular"] is True

    def test_check_reports_violation(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """An irregular domain exits with the violation code."""
        path = write_domain(
            tmp_path / "restoring.json",
            Domain.from_lists([[1, 2, 3], [2, 1, 3], [2, 3, 1], [3, 2, 1], [1, 3, 2]]),
        )

        code, data = run(["domain", "check", "--domain", str(path)], capsys)

        assert code == 1
        assert data["no_restoration"]["holds"] is False

    def test_thresholds_with_dot(
        self, tmp_path: Path, hybrid_5_2_4: Domain, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Threshold recovery can also write the graph."""
        # Arrange
        path = write_domain(tmp_path / "hybrid.json", hybrid_5_2_4)
        dot = tmp_path / "graph.dot"

        # Act
        code, data = run(
            ["domain", "thresholds", "--domain", str(path), "--dot", str(dot)], capsys
        )

        # Assert
        assert code == 0
        assert (data["klo"], data["khi"]) == (2, 4)
        assert "a2 -- a4;" in dot.read_text(encoding="utf-8")

    @pytest.mark.parametrize("action", ["check", "thresholds"])
    def test_domain_file_positional(
        self,
        tmp_path: Path,
        hybrid_5_2_4: Domain,
        action: str,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """The domain file may be given without --domain."""
        path = write_domain(tmp_path / "hybrid.json", hybrid_5_2_4)

        positional = run(["domain", action, str(path)], capsys)
        flagged = run(["domain", action, "--domain", str(path)], capsys)

        assert positional == flagged
        assert positional[0] == 0

    def test_generator_cap(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Overly large m exits with the budget code."""
        code, data = run(["domain", "gen", "--family", "complete", "--m", "9"], capsys)

        assert code == 2
        assert data is None


class TestRuleCommands:
    """Test rule eval, audit and decompose."""

    def test_eval(self, examples_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """The social lottery is printed exactly."""
        code, data = run(
            [
                "rule",
                "eval",
                "--ballots",
                str(examples_dir / "two_voter_ballots.json"),
                "--tops",
                "2,4",
                "--decimal",
            ],
            capsys,
        )

        assert code == 0
        assert data["lottery"]["probabilities"] == ["0", "7/10", "1/5", "1/10"]
        assert data["lottery"]["approx"][1] == "~0.7000"

    def test_audit_finds_manipulation(
        self,
        examples_dir: Path,
        tmp_path: Path,
        hybrid_4_2_4: Domain,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """A failed audit prints its counterexample and exits with 1."""
        # Arrange
        domain = write_domain(tmp_path / "hybrid.json", hybrid_4_2_4)

        # Act
        code, data = run(
            [
                "rule",
                "audit",
                "--ballots",
                str(examples_dir / "two_voter_ballots.json"),
                "--domain",
                str(domain),
                "--checks",
                "sp",
            ],
            capsys,
        )

        # Assert
        assert code == 1
        assert data["holds"] is False
        assert data["checks"][0]["counterexample"]["voter"] in (1, 2)

    def test_audit_budget(
        self,
        examples_dir: Path,
        tmp_path: Path,
        hybrid_4_2_4: Domain,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """A scan over budget exits with 2."""
        domain = write_domain(tmp_path / "hybrid.json", hybrid_4_2_4)

        code, _ = run(
            [
                "rule",
                "audit",
                "--ballots",
                str(examples_dir / "two_voter_ballots.json"),
                "--domain",
                str(domain),
                "--checks",
                "sp",
                "--budget",
                "1",
            ],
            capsys,
        )

        assert code == 2

    def test_sampled_audit(
        self, tmp_path: Path, hybrid_4_2_4: Domain, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Sampled audits report their failure share."""
        domain = write_domain(tmp_path / "hybrid.json", hybrid_4_2_4)

        code, data = run(
            [
                "rule",
                "audit",
                "--domain",
                str(domain),
                "--n",
                "2",
                "--sample",
                "4",
                "--seed",
                "1",
                "--thresholds",
                "2,4",
            ],
            capsys,
        )

        assert code == 0
        assert data["sp_failures"] == 4
        assert data["failure_share"] == "1"

    def test_decompose(
        self, examples_dir: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Decomposition writes components and trace to --output."""
        # Arrange
        output = tmp_path / "decomposition.json"

        # Act
        code, stdout = run(
            [
                "rule",
                "decompose",
                "--ballots",
                str(examples_dir / "anonymous_decomposable_ballots.json"),
                "--no-verify",
                "--output",
                str(output),
            ],
            capsys,
        )

        # Assert
        data = json.loads(output.read_text(encoding="utf-8"))
        assert code == 0
        assert stdout is None
        assert data["status"] == "decomposed"
        assert len(data["components"]) == 6
        assert data["components"][0]["ballots"]["0"] == 1

    def test_decomposed_component_feeds_eval(
        self, examples_dir: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """A component of the output is itself a ballots file."""
        # Arrange
        _, data = run(
            [
                "rule",
                "decompose",
                "--ballots",
                str(examples_dir / "anonymous_decomposable_ballots.json"),
                "--no-verify",
            ],
            capsys,
        )
        component = tmp_path / "component.json"
        component.write_text(json.dumps(data["components"][0]), encoding="utf-8")

        # Act
        code, evaluated = run(
            ["rule", "eval", "--ballots", str(component), "--tops", "2,4,4"], capsys
        )

        # Assert
        assert code == 0
        assert evaluated is not None

    def test_decompose_rejects(self, examples_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Per-capita failures are reported with exit code 1."""
        code, data = run(
            ["rule", "decompose", "--ballots", str(examples_dir / "per_capita_failing_ballots.json")],
            capsys,
        )

        assert code == 1
        assert data["status"] == "rejected"
        assert data["witness"]["side"] in ("left", "right")


class TestInputErrors:
    """Test malformed input handling."""

    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A missing file exits with 3 and a message on stderr."""
        # Act
        code = main(["domain", "check", "--domain", str(tmp_path / "missing.json")])

        # Assert
        captured = capsys.readouterr()
        assert code == 3
        assert captured.out == ""
        assert "MALFORMED_INPUT" in captured.err

    def test_usage_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Usage errors exit with 3."""
        assert main(["domain"]) == 3

    def test_lottery_length_must_match_m(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Anonymous lotteries shorter than the declared m are rejected."""
        # Arrange
        ballots = tmp_path / "short.json"
        payload = {
            "n": 2,
            "m": 4,
            "anonymous": True,
            "ballots": {"0": [1, 0, 0], "1": [0, 1, 0], "2": [0, 0, 1]},
        }
        ballots.write_text(json.dumps(payload), encoding="utf-8")

        # Act
        code = main(["rule", "eval", "--ballots", str(ballots), "--tops", "1,3"])

        # Assert
        captured = capsys.readouterr()
        assert code == 3
        assert captured.out == ""
        assert "m=4" in captured.err
