"""Recovery of the hybrid thresholds of a regular domain.

A regular domain is hybrid for thresholds read off its strong-connectedness
graph: the a1-am vertex paths share a common prefix ending at the left
threshold and a common suffix starting at the right threshold. A single
a1-am path means the domain is single-peaked.
"""

from dataclasses import dataclass, field
from itertools import takewhile

from src.domain.constants import DEFAULT_PATH_CAP, Classification
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    InternalInconsistencyError,
    NotRegularError,
)
from src.domain.services.domain_generators import is_single_peaked
from src.domain.services.regularity import RegularityReport, is_regular
from src.domain.services.strong_connectedness import (
    StrongConnGraph,
    VertexPath,
    all_vertex_paths,
    is_hybrid_star,
    strong_conn_graph,
)
from src.domain.value_objects.alternative import Alternative
from src.domain.value_objects.preference import Preference


@dataclass(frozen=True)
class ThresholdReport:
    """Outcome of threshold recovery.

    Attributes:
        classification: SinglePeaked, Hybrid or NotHybridStar
        k_lo: Left threshold for Hybrid, otherwise None
        k_hi: Right threshold for Hybrid, otherwise None
        path_count: Number of a1-am vertex paths
        common_prefix: Longest prefix shared by every a1-am path
        common_suffix: Longest suffix shared by every a1-am path
        continuation_check: Whether two distinct neighbours of each threshold
            continue the paths past it (None when not applicable)
        relabeling: New label of each alternative when the domain was relabeled
            so that its reversed pair becomes the natural order and its reversal
        diagnostics: Human-readable notes on anything that did not line up
        graph: The strong-connectedness graph the recovery ran on
    """

    classification: Classification
    k_lo: int | None
    k_hi: int | None
    path_count: int
    common_prefix: tuple[Alternative, ...]
    common_suffix: tuple[Alternative, ...]
    continuation_check: bool | None
    relabeling: tuple[Alternative, ...] | None
    diagnostics: tuple[str, ...]
    graph: StrongConnGraph = field(repr=False, compare=False)

    @property
    def relabeled(self) -> bool:
        """True iff alternatives were relabeled before recovery."""
        return self.relabeling is not None

    @property
    def intervals(self) -> tuple[range, range, range] | None:
        """L, M and R, overlapping only at the thresholds."""
        if self.k_lo is None or self.k_hi is None:
            return None
        m = len(self.graph.vertices)
        return (
            range(1, self.k_lo + 1),
            range(self.k_lo, self.k_hi + 1),
            range(self.k_hi, m + 1),
        )


def _regularity_failures(report: RegularityReport) -> list[str]:
    failures = []
    if not report.minimally_rich:
        missing = ", ".join(f"a{a}" for a in report.minimally_rich.missing_peaks)
        failures.append(f"not minimally rich (missing peaks {missing})")
    if not report.diverse:
        failures.append("no completely reversed pair")
    if not report.no_restoration:
        failures.append("restoration required")
    return failures


def relabel(domain: Domain, reference: Preference) -> tuple[Domain, tuple[Alternative, ...]]:
    """Rename alternatives so that reference becomes the natural order.

    Returns:
        The relabeled domain and the new label of each alternative a1..am
    """
    mapping = tuple(reference.rank(a) for a in range(1, domain.m + 1))
    relabeled = Domain.of(
        Preference(tuple(mapping[a - 1] for a in p.order)) for p in domain
    )
    return relabeled, mapping


def _common_prefix(paths: list[VertexPath]) -> tuple[Alternative, ...]:
    columns = zip(*(p.vertices for p in paths), strict=False)
    return tuple(column[0] for column in takewhile(lambda c: len(set(c)) == 1, columns))


def _common_suffix(paths: list[VertexPath]) -> tuple[Alternative, ...]:
    reversed_paths = [VertexPath(p.vertices[::-1]) for p in paths]
    return _common_prefix(reversed_paths)[::-1]


def _continuations(
    graph: StrongConnGraph, paths: list[VertexPath], threshold: Alternative, forward: bool
) -> set[Alternative]:
    """Neighbours of the threshold met on the paths beyond it."""
    found: set[Alternative] = set()
    for path in paths:
        position = path.vertices.index(threshold)
        rest = path.vertices[position + 1 :] if forward else path.vertices[:position]
        found.update(a for a in rest if graph.has_edge(a, threshold))
    return found


def recover_thresholds(domain: Domain, cap: int = DEFAULT_PATH_CAP) -> ThresholdReport:
    """Recover (k_lo, k_hi) from a regular domain.

    Args:
        domain: A regular preference domain
        cap: Maximum number of a1-am vertex paths to enumerate

    Returns:
        The classification with its thresholds and diagnostics

    Raises:
        NotRegularError: If the domain fails a regularity check
        EnumerationOverflowError: If the a1-am paths exceed the cap
        InternalInconsistencyError: If the graph of a regular domain is disconnected
    """
    regularity = is_regular(domain)
    failures = _regularity_failures(regularity)
    if failures:
        raise NotRegularError("Domain is not regular: " + "; ".join(failures))

    m = domain.m
    diagnostics: list[str] = []
    relabeling: tuple[Alternative, ...] | None = None
    identity = Preference.identity(m)
    if identity not in domain or identity.reversed() not in domain:
        witness = regularity.diverse.witness
        assert witness is not None
        domain, relabeling = relabel(domain, witness[0])
        diagnostics.append(
            f"relabeled alternatives so that {witness[0]} becomes the natural order"
        )

    graph = strong_conn_graph(domain)
    if not graph.is_connected():
        raise InternalInconsistencyError(
            "Strong-connectedness graph of a regular domain is disconnected"
        )
    paths = all_vertex_paths(graph, 1, m, cap)
    prefix = _common_prefix(paths)
    suffix = _common_suffix(paths)

    def report(
        classification: Classification,
        k_lo: int | None = None,
        k_hi: int | None = None,
        continuation_check: bool | None = None,
    ) -> ThresholdReport:
        return ThresholdReport(
            classification=classification,
            k_lo=k_lo,
            k_hi=k_hi,
            path_count=len(paths),
            common_prefix=prefix,
            common_suffix=suffix,
            continuation_check=continuation_check,
            relabeling=relabeling,
            diagnostics=tuple(diagnostics),
            graph=graph,
        )

    if len(paths) == 1:
        if paths[0].vertices != tuple(range(1, m + 1)):
            diagnostics.append(f"unique a1-a{m} path {paths[0].vertices} is not the natural order")
            return report(Classification.NOT_HYBRID_STAR)
        return report(Classification.SINGLE_PEAKED)

    k_lo, k_hi = prefix[-1], suffix[0]
    if prefix != tuple(range(1, k_lo + 1)) or suffix != tuple(range(k_hi, m + 1)):
        diagnostics.append(
            f"common prefix {prefix} or suffix {suffix} does not follow the natural order"
        )
        return report(Classification.NOT_HYBRID_STAR)

    continuation_check = (
        len(_continuations(graph, paths, k_lo, forward=True)) >= 2
        and len(_continuations(graph, paths, k_hi, forward=False)) >= 2
    )
    if not continuation_check:
        diagnostics.append(
            f"fewer than two distinct neighbours continue past a{k_lo} or before a{k_hi}"
        )
        if all(is_single_peaked(p) for p in domain):
            return report(Classification.SINGLE_PEAKED, continuation_check=False)
        return report(Classification.NOT_HYBRID_STAR, continuation_check=False)

    star = is_hybrid_star(domain, k_lo, k_hi, cap)
    if not star:
        diagnostics.append(
            f"hybrid* check failed for ({k_lo}, {k_hi}): "
            f"{len(star.outside_hybrid)} preferences outside the hybrid domain, "
            f"uncovered {list(star.uncovered)}, leaves {list(star.leaves)}"
        )
        return report(Classification.NOT_HYBRID_STAR, k_lo, k_hi, continuation_check)
    diagnostics.extend(
        f"edge a{s}-a{t} lies outside the left line, the middle and the right line"
        for s, t in partition_edge_violations(graph, k_lo, k_hi)
    )
    diagnostics.extend(
        f"{p} ranks a{s} above a{t} although a{t} is on every path from its peak"
        for p, t, s in preference_restriction_violations(domain, graph, cap)
    )
    return report(Classification.HYBRID, k_lo, k_hi, continuation_check)


def partition_edge_violations(
    graph: StrongConnGraph, k_lo: int, k_hi: int
) -> list[tuple[Alternative, Alternative]]:
    """Edges that lie neither on the left line, in the middle, nor on the right line.

    The left and right parts must be the index-order lines a1..a_k_lo and
    a_k_hi..am; any other edge touching them is reported.
    """
    violations = []
    for s, t in graph.edges:
        in_middle = k_lo <= s and t <= k_hi
        on_left_line = t <= k_lo and t == s + 1
        on_right_line = s >= k_hi and t == s + 1
        if not (in_middle or on_left_line or on_right_line):
            violations.append((s, t))
    return violations


def preference_restriction_violations(
    domain: Domain, graph: StrongConnGraph, cap: int = DEFAULT_PATH_CAP
) -> list[tuple[Preference, Alternative, Alternative]]:
    """Triples (P, a_t, a_s) where a_t lies on every peak-to-a_s path yet P ranks a_s higher.

    On a regular domain an alternative present on every vertex path from the
    peak to a_s is ranked above a_s; the list is empty when that holds.
    """
    violations = []
    unavoidable: dict[tuple[Alternative, Alternative], set[Alternative]] = {}
    for p in domain:
        for s in range(1, domain.m + 1):
            if s == p.top:
                continue
            key = (p.top, s)
            if key not in unavoidable:
                paths = all_vertex_paths(graph, p.top, s, cap)
                common = set(paths[0].vertices) if paths else set()
                for path in paths[1:]:
                    common &= set(path.vertices)
                unavoidable[key] = common - {s}
            violations.extend((p, t, s) for t in sorted(unavoidable[key]) if not p.prefers(t, s))
    return violations
