"""Unit tests for profiles and coalitions."""

import pytest

from src.domain.exceptions.domain_exceptions import (
    DegenerateSizeError,
    InvalidIntervalError,
    InvalidPreferenceError,
)
from src.domain.value_objects import coalition as coalitions
from src.domain.value_objects.preference import Preference
from src.domain.value_objects.profile import Profile, TopProfile


pytestmark = pytest.mark.unit


class TestTopProfile:
    """Test suite for TopProfile."""

    def test_reads_tops_by_voter(self) -> None:
        """Voters are 1-based."""
        tops = TopProfile.of([2, 4, 4], 5)
        assert tops.n == 3
        assert tops.top(1) == 2
        assert tops.with_top(1, 5).tops == (5, 4, 4)

    def test_permuted_reorders_voters(self) -> None:
        """Position i receives the peak of voter permutation[i]."""
        tops = TopProfile.of([1, 2, 3], 3)
        assert tops.permuted([3, 1, 2]).tops == (3, 1, 2)

    def test_rejects_single_voter(self) -> None:
        """At least two voters are required."""
        with pytest.raises(DegenerateSizeError):
            TopProfile.of([1], 3)

    def test_rejects_out_of_range_top(self) -> None:
        """Peaks must name one of a1..am."""
        with pytest.raises(InvalidIntervalError):
            TopProfile.of([1, 6], 5)


class TestProfile:
    """Test suite for Profile."""

    def test_tops_reduction(self) -> None:
        """A profile reduces to its peaks."""
        profile = Profile((Preference.of([2, 4, 3, 1]), Preference.of([4, 2, 3, 1])))
        assert profile.tops() == TopProfile.of([2, 4], 4)
        assert profile.m == 4

    def test_with_preference_replaces_one_voter(self) -> None:
        """(P'_i, P_-i) keeps the other voters."""
        p1, p2 = Preference.of([2, 4, 3, 1]), Preference.of([4, 2, 3, 1])
        profile = Profile((p1, p2)).with_preference(2, p1)
        assert profile.prefs == (p1, p1)
        assert profile.preference(2) == p1

    def test_rejects_mixed_sizes(self) -> None:
        """All preferences share m."""
        with pytest.raises(InvalidPreferenceError):
            Profile((Preference.identity(3), Preference.identity(4)))


class TestCoalition:
    """Test suite for coalition bitmasks."""

    def test_encodes_voters_as_bits(self) -> None:
        """Voter 1 is bit 0."""
        mask = coalitions.of([1, 3])
        assert mask == 0b101
        assert coalitions.members(mask, 3) == (1, 3)
        assert coalitions.size(mask) == 2
        assert coalitions.contains(mask, 3)
        assert not coalitions.contains(mask, 2)

    def test_complement_and_grand(self) -> None:
        """N minus {1,3} is {2}."""
        assert coalitions.grand(3) == 7
        assert coalitions.complement(0b101, 3) == 0b010

    def test_covers_add_one_voter(self) -> None:
        """Immediate supersets of {2} in a 3-voter electorate."""
        assert list(coalitions.covers(0b010, 3)) == [(1, 0b011), (3, 0b110)]

    def test_of_size_in_mask_order(self) -> None:
        """Two-member coalitions of three voters."""
        assert list(coalitions.of_size(3, 2)) == [3, 5, 6]
        assert list(coalitions.proper_nonempty(2)) == [1, 2]

    def test_render(self) -> None:
        """Coalitions render as sets of voter ids."""
        assert coalitions.render(0b011, 3) == "{1,2}"
        assert coalitions.render(0, 3) == "{}"
