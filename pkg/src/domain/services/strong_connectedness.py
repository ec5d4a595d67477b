"""Strong-connectedness graphs over alternatives and their vertex paths."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from src.domain.constants import DEFAULT_PATH_CAP
from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    EmptyVertexSetError,
    EnumerationOverflowError,
    InvalidPreferenceError,
)
from src.domain.services.domain_generators import is_hybrid, validate_thresholds
from src.domain.value_objects.alternative import Alternative, validate_alternative
from src.domain.value_objects.preference import Preference

type Edge = tuple[Alternative, Alternative]


@dataclass(frozen=True)
class StrongConnGraph:
    """The graph on a vertex set B whose edges are strongly connected pairs.

    a_s and a_t are strongly connected when the domain holds two preferences
    that swap them between ranks 1 and 2 and agree everywhere below.

    Attributes:
        vertices: The vertex set B in natural order
        edges: Edges (a_s, a_t) with s < t, sorted
    """

    vertices: tuple[Alternative, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def graph(self) -> nx.Graph:
        """networkx view of the graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def has_edge(self, a: Alternative, b: Alternative) -> bool:
        """True iff a and b are strongly connected."""
        return bool(self.graph.has_edge(a, b))

    def neighbours(self, a: Alternative) -> tuple[Alternative, ...]:
        """Vertices strongly connected to a, in natural order."""
        return tuple(sorted(self.graph.neighbors(a)))

    def leaves(self) -> tuple[Alternative, ...]:
        """Vertices with exactly one neighbour."""
        return tuple(a for a in self.vertices if self.graph.degree(a) == 1)

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from the first one."""
        return bool(nx.is_connected(self.graph))

    def to_dot(self, name: str = "strong_connectedness") -> str:
        """Render in Graphviz DOT."""
        lines = [f"graph {name} {{"]
        lines.extend(f"  a{a};" for a in self.vertices)
        lines.extend(f"  a{s} -- a{t};" for s, t in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexPath:
    """A non-repeating walk x1, ..., xt along strong-connectedness edges.

    Attributes:
        vertices: The alternatives in path order
    """

    vertices: tuple[Alternative, ...]

    def __post_init__(self) -> None:
        """Reject repeated vertices."""
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPreferenceError(f"Vertex path {self.vertices} repeats a vertex")

    @classmethod
    def on(cls, graph: StrongConnGraph, vertices: Sequence[Alternative]) -> "VertexPath":
        """Build a path after checking every consecutive pair is an edge.

        Raises:
            InvalidPreferenceError: If a step is not an edge or a vertex repeats
        """
        for a, b in zip(vertices, vertices[1:], strict=False):
            if not graph.has_edge(a, b):
                raise InvalidPreferenceError(f"a{a} and a{b} are not strongly connected")
        return cls(tuple(vertices))

    @property
    def start(self) -> Alternative:
        """x1."""
        return self.vertices[0]

    @property
    def end(self) -> Alternative:
        """xt."""
        return self.vertices[-1]

    def segment(self, a: Alternative, b: Alternative) -> tuple[Alternative, ...]:
        """The sub-path from a to b, both included."""
        i, j = self.vertices.index(a), self.vertices.index(b)
        return self.vertices[i : j + 1]

    def __contains__(self, a: object) -> bool:
        return a in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)


def strong_conn_graph(domain: Domain, vertices: Iterable[Alternative] | None = None) -> StrongConnGraph:
    """Build the strong-connectedness graph of a domain restricted to B.

    Args:
        domain: The preference domain
        vertices: The vertex set B; all alternatives when omitted

    Returns:
        The graph with exactly the strongly connected pairs inside B

    Raises:
        EmptyVertexSetError: If B is empty
    """
    chosen = sorted(set(vertices)) if vertices is not None else list(range(1, domain.m + 1))
    if not chosen:
        raise EmptyVertexSetError("The vertex set of a strong-connectedness graph is empty")
    for a in chosen:
        validate_alternative(a, domain.m)
    inside = set(chosen)
    edges: set[Edge] = set()
    for preference in domain:
        s, t = preference.top, preference.second
        if s < t and s in inside and t in inside and preference.swap_at(1) in domain:
            edges.add((s, t))
    return StrongConnGraph(tuple(chosen), tuple(sorted(edges)))


def all_vertex_paths(
    graph: StrongConnGraph,
    a: Alternative,
    b: Alternative,
    cap: int = DEFAULT_PATH_CAP,
) -> list[VertexPath]:
    """Enumerate every vertex path from a to b, sorted lexicographically.

    Args:
        graph: The strong-connectedness graph
        a: Start vertex
        b: End vertex
        cap: Maximum number of paths before giving up

    Returns:
        All simple paths; the single null path [a] when a == b

    Raises:
        EnumerationOverflowError: If more than cap paths exist
    """
    if a not in graph.vertices or b not in graph.vertices:
        raise EmptyVertexSetError(f"a{a} or a{b} is not a vertex of the graph")
    if a == b:
        return [VertexPath((a,))]
    paths: list[VertexPath] = []
    for path in nx.all_simple_paths(graph.graph, source=a, target=b):
        if len(paths) >= cap:
            raise EnumerationOverflowError(
                f"More than {cap} vertex paths between a{a} and a{b}"
            )
        paths.append(VertexPath(tuple(path)))
    return sorted(paths, key=lambda p: p.vertices)


@dataclass(frozen=True)
class HybridStarReport:
    """Diagnostics of the hybrid* conditions for one threshold pair.

    Attributes:
        k_lo: Left threshold
        k_hi: Right threshold
        outside_hybrid: Preferences that are not (k_lo, k_hi)-hybrid
        uncovered: Interior alternatives on no a1-am vertex path
        leaves: Leaves of the middle subgraph (checked only when k_hi - k_lo > 1)
    """

    k_lo: int
    k_hi: int
    outside_hybrid: tuple[Preference, ...]
    uncovered: tuple[Alternative, ...]
    leaves: tuple[Alternative, ...]

    @property
    def holds(self) -> bool:
        """True iff all three conditions pass."""
        return not (self.outside_hybrid or self.uncovered or self.leaves)

    def __bool__(self) -> bool:
        return self.holds


def is_hybrid_star(
    domain: Domain, k_lo: int, k_hi: int, cap: int = DEFAULT_PATH_CAP
) -> HybridStarReport:
    """Check the three hybrid* conditions for the thresholds (k_lo, k_hi).

    The domain must lie inside the hybrid domain, every interior alternative
    must sit on some a1-am vertex path, and when the middle interval has more
    than two alternatives its subgraph must have no leaf.

    Raises:
        InvalidThresholdsError: If not 1 <= k_lo < k_hi <= m
        EnumerationOverflowError: If a1-am paths exceed the cap
    """
    m = domain.m
    validate_thresholds(m, k_lo, k_hi)
    outside = tuple(p for p in domain if not is_hybrid(p, k_lo, k_hi))
    graph = strong_conn_graph(domain)
    covered = {a for path in all_vertex_paths(graph, 1, m, cap) for a in path.vertices}
    uncovered = tuple(a for a in range(2, m) if a not in covered)
    leaves: tuple[Alternative, ...] = ()
    if k_hi - k_lo > 1:
        leaves = strong_conn_graph(domain, range(k_lo, k_hi + 1)).leaves()
    return HybridStarReport(k_lo, k_hi, outside, uncovered, leaves)
