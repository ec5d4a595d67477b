"""Finite preference domains and their adjacency graph."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from src.domain.exceptions.domain_exceptions import (
    EmptyCollectionError,
    InvalidPreferenceError,
)
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.preference import Preference


@dataclass(frozen=True)
class Domain:
    """A canonical (sorted, deduplicated) set of preferences over a1..am.

    Equality is structural because the preference tuple is canonical. The
    adjacency graph links P and Q when they differ by one contiguous swap and
    is built on first use.

    Attributes:
        m: Number of alternatives
        prefs: Preferences in lexicographic order of their rankings
    """

    m: int
    prefs: tuple[Preference, ...]

    def __post_init__(self) -> None:
        """Canonicalize and validate the preference set.

        Raises:
            EmptyCollectionError: If there are no preferences
            InvalidPreferenceError: If a preference is over a different m
        """
        if not self.prefs:
            raise EmptyCollectionError("A domain needs at least one preference")
        if any(p.m != self.m for p in self.prefs):
            raise InvalidPreferenceError(f"Every preference must rank {self.m} alternatives")
        object.__setattr__(self, "prefs", tuple(sorted(set(self.prefs))))

    @classmethod
    def of(cls, prefs: Iterable[Preference]) -> "Domain":
        """Build a domain from preferences, inferring m.

        Raises:
            EmptyCollectionError: If prefs is empty
        """
        items = tuple(prefs)
        if not items:
            raise EmptyCollectionError("A domain needs at least one preference")
        return cls(items[0].m, items)

    @classmethod
    def from_lists(cls, orders: Iterable[Iterable[int]]) -> "Domain":
        """Build a domain from integer orders such as [[1, 2, 3], [3, 2, 1]]."""
        return cls.of(Preference.of(tuple(order)) for order in orders)

    def __len__(self) -> int:
        return len(self.prefs)

    def __iter__(self) -> Iterator[Preference]:
        return iter(self.prefs)

    def __contains__(self, preference: object) -> bool:
        return preference in self._members

    @cached_property
    def _members(self) -> frozenset[Preference]:
        return frozenset(self.prefs)

    @cached_property
    def adjacency(self) -> nx.Graph:
        """Graph on the preferences with an edge for every adjacent pair.

        Each edge stores the swapped pair under the "pair" attribute.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.prefs)
        for p in self.prefs:
            for position in range(1, self.m):
                q = p.swap_at(position)
                if q in self._members and p < q:
                    pair = frozenset((p.ranked(position), p.ranked(position + 1)))
                    graph.add_edge(p, q, pair=pair)
        return graph

    @cached_property
    def _by_top(self) -> dict[Alternative, tuple[Preference, ...]]:
        grouped: dict[Alternative, list[Preference]] = {}
        for p in self.prefs:
            grouped.setdefault(p.top, []).append(p)
        return {a: tuple(ps) for a, ps in grouped.items()}

    def peaks(self) -> tuple[Alternative, ...]:
        """Alternatives that are some preference's peak, in natural order."""
        return tuple(sorted(self._by_top))

    def with_top(self, a: Alternative) -> tuple[Preference, ...]:
        """Preferences whose peak is a."""
        return self._by_top.get(a, ())

    def neighbours(self, preference: Preference) -> tuple[Preference, ...]:
        """Members adjacent to the preference, in canonical order."""
        return tuple(sorted(self.adjacency.neighbors(preference)))

    def issubset(self, other: "Domain") -> bool:
        """True iff every preference here belongs to other."""
        return self.m == other.m and self._members <= other._members

    def to_lists(self) -> list[list[int]]:
        """Serializable form."""
        return [p.to_list() for p in self.prefs]
