"""Regularity checks: minimal richness, diversity and no-restoration."""

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from src.domain.entities.preference_domain import Domain
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.preference import Preference


@dataclass(frozen=True)
class RichnessResult:
    """Whether every alternative is some preference's peak.

    Attributes:
        holds: True iff the domain is minimally rich
        missing_peaks: Alternatives that are nobody's peak
    """

    holds: bool
    missing_peaks: tuple[Alternative, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class DiversityResult:
    """Whether the domain holds a completely reversed pair.

    Attributes:
        holds: True iff the domain satisfies diversity
        witness: The lexicographically first reversed pair found
    """

    holds: bool
    witness: tuple[Preference, Preference] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class RestorationCounterexample:
    """Two preferences that no path joins without restoring the pair's order.

    Attributes:
        source: Path start P
        target: Path end P'
        pair: The alternatives (a_s, a_t), s < t, whose order must switch twice
    """

    source: Preference
    target: Preference
    pair: tuple[Alternative, Alternative]


@dataclass(frozen=True)
class NoRestorationResult:
    """Outcome of the no-restoration check.

    Attributes:
        holds: True iff no pair ever needs restoring
        counterexample: The lexicographically smallest failing triple
    """

    holds: bool
    counterexample: RestorationCounterexample | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class RegularityReport:
    """Conjunction of the three regularity checks with their witnesses."""

    minimally_rich: RichnessResult
    diverse: DiversityResult
    no_restoration: NoRestorationResult

    @property
    def is_regular(self) -> bool:
        """True iff all three checks pass."""
        return bool(self.minimally_rich and self.diverse and self.no_restoration)


def is_minimally_rich(domain: Domain) -> RichnessResult:
    """Check that every a_k is the peak of some preference."""
    peaks = set(domain.peaks())
    missing = tuple(a for a in range(1, domain.m + 1) if a not in peaks)
    return RichnessResult(holds=not missing, missing_peaks=missing)


def has_diversity(domain: Domain) -> DiversityResult:
    """Check for a completely reversed pair, returning the first one found."""
    for preference in domain:
        reversal = preference.reversed()
        if reversal in domain:
            return DiversityResult(holds=True, witness=(preference, reversal))
    return DiversityResult(holds=False)


class _PairLayers:
    """Adjacency components on each side of one pair's relative order.

    Plus holds preferences ranking a_s above a_t. A path may cross between
    the layers only along an edge that swaps exactly a_s and a_t.
    """

    def __init__(self, domain: Domain, s: Alternative, t: Alternative) -> None:
        graph = domain.adjacency
        plus = [p for p in domain if p.prefers(s, t)]
        minus = [p for p in domain if not p.prefers(s, t)]
        self.component: dict[Preference, tuple[str, int]] = {}
        self.counts: dict[str, int] = {}
        for side, members in (("+", plus), ("-", minus)):
            parts = list(nx.connected_components(graph.subgraph(members)))
            self.counts[side] = len(parts)
            for index, part in enumerate(parts):
                for p in part:
                    self.component[p] = (side, index)
        pair = frozenset((s, t))
        self.crossings: set[tuple[int, int]] = set()
        for p, q, swapped in graph.edges(data="pair"):
            if swapped == pair:
                up, down = (p, q) if p.prefers(s, t) else (q, p)
                self.crossings.add((self.component[up][1], self.component[down][1]))

    def fully_connected(self) -> bool:
        """True iff every ordered pair of preferences is joined restoration-free."""
        if any(count > 1 for count in self.counts.values()):
            return False
        if self.counts["+"] and self.counts["-"]:
            return bool(self.crossings)
        return True

    def connects(self, source: Preference, target: Preference) -> bool:
        """True iff some path from source to target switches the pair at most once."""
        side_s, part_s = self.component[source]
        side_t, part_t = self.component[target]
        if side_s == side_t:
            return part_s == part_t
        if side_s == "+":
            return (part_s, part_t) in self.crossings
        return (part_t, part_s) in self.crossings


def is_no_restoration(domain: Domain) -> NoRestorationResult:
    """Check that no pair's relative order ever has to be restored.

    For each pair {a_s, a_t} the domain splits into the preferences ranking
    a_s above a_t and the rest. A restoration-free path from P to P' stays in
    one layer when P and P' agree on the pair, and otherwise crosses once
    along an edge swapping exactly that pair. Reachability is decided on
    connected components of the two induced subgraphs.

    Returns:
        The result with the lexicographically smallest (P, P', pair) failing
    """
    best: RestorationCounterexample | None = None
    for s, t in combinations(range(1, domain.m + 1), 2):
        layers = _PairLayers(domain, s, t)
        if layers.fully_connected():
            continue
        found = _first_failure(domain, layers, (s, t))
        if found is not None and (best is None or _key(found) < _key(best)):
            best = found
    return NoRestorationResult(holds=best is None, counterexample=best)


def _first_failure(
    domain: Domain, layers: _PairLayers, pair: tuple[Alternative, Alternative]
) -> RestorationCounterexample | None:
    for source in domain:
        for target in domain:
            if source != target and not layers.connects(source, target):
                return RestorationCounterexample(source, target, pair)
    return None


def _key(
    counterexample: RestorationCounterexample,
) -> tuple[Preference, Preference, tuple[Alternative, Alternative]]:
    return (counterexample.source, counterexample.target, counterexample.pair)


def is_regular(domain: Domain) -> RegularityReport:
    """Run the three regularity checks."""
    return RegularityReport(
        minimally_rich=is_minimally_rich(domain),
        diverse=has_diversity(domain),
        no_restoration=is_no_restoration(domain),
    )
