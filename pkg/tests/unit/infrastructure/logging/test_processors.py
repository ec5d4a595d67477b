"""Tests for custom structlog processors."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.infrastructure.logging.context import (
    add_run_context_processor,
    bind_run_context,
    clear_run_context,
    get_run_id,
)
from src.infrastructure.logging.processors import render_fractions


pytestmark = pytest.mark.unit


class TestRenderFractions:
    """Test the fraction renderer."""

    def test_renders_top_level_fractions(self) -> None:
        """Fractions become p/q strings."""
        # Arrange
        event_dict = {"event": "Round", "alpha": Fraction(1, 6), "round": 1}

        # Act
        result = render_fractions(None, "info", event_dict)

        # Assert
        assert result == {"event": "Round", "alpha": "1/6", "round": 1}

    def test_renders_nested_values(self) -> None:
        """Lists, tuples and dicts are walked."""
        event_dict = {
            "lottery": (Fraction(1, 2), Fraction(1, 2)),
            "weights": {"a": [Fraction(3, 4)]},
        }

        result = render_fractions(None, "info", event_dict)

        assert result == {"lottery": ["1/2", "1/2"], "weights": {"a": ["3/4"]}}


class TestRunContext:
    """Test the run context processor."""

    def test_adds_run_id_and_subcommand(self) -> None:
        """Bound context appears on every event."""
        # Arrange
        run_id = bind_run_context("rule audit", run_id="run-1")

        try:
            # Act
            result = add_run_context_processor(None, "info", {"event": "x"})

            # Assert
            assert run_id == "run-1"
            assert result == {"event": "x", "run_id": "run-1", "subcommand": "rule audit"}
        finally:
            clear_run_context()

    def test_generates_run_id(self) -> None:
        """A fresh id is generated when none is given."""
        try:
            run_id = bind_run_context("domain gen")

            assert get_run_id() == run_id
            assert len(run_id) == 36
        finally:
            clear_run_context()

    def test_no_context(self) -> None:
        """Nothing is added outside a command."""
        clear_run_context()

        assert add_run_context_processor(None, "info", {"event": "x"}) == {"event": "x"}
