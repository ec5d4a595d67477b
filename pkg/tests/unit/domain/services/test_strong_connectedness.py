"""Unit tests for strong-connectedness graphs and vertex paths."""

import pytest

from src.domain.entities.preference_domain import Domain
from src.domain.exceptions.domain_exceptions import (
    EmptyVertexSetError,
    EnumerationOverflowError,
    InvalidPreferenceError,
)
from src.domain.services.domain_generators import gen_single_peaked
from src.domain.services.strong_connectedness import (
    VertexPath,
    all_vertex_paths,
    is_hybrid_star,
    strong_conn_graph,
)


pytestmark = pytest.mark.unit


class TestStrongConnGraph:
    """Test suite for building the graph."""

    def test_two_axis_edges(self, two_axis_domain: Domain) -> None:
        """Swapping a3 and a4 on the second axis adds the diamond edges."""
        # Act
        graph = strong_conn_graph(two_axis_domain)

        # Assert
        assert graph.vertices == (1, 2, 3, 4, 5, 6)
        assert graph.edges == ((1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6))
        assert graph.neighbours(3) == (2, 4, 5)
        assert graph.leaves() == (1, 6)
        assert graph.is_connected()

    def test_single_peaked_graph_is_the_line(self) -> None:
        """Only consecutive alternatives are strongly connected."""
        graph = strong_conn_graph(gen_single_peaked(4))

        assert graph.edges == ((1, 2), (2, 3), (3, 4))

    def test_restricted_vertex_set(self, hybrid_5_2_4: Domain) -> None:
        """The middle subgraph of the (2,4)-hybrid domain is a triangle."""
        # Act
        middle = strong_conn_graph(hybrid_5_2_4, range(2, 5))

        # Assert
        assert middle.vertices == (2, 3, 4)
        assert middle.edges == ((2, 3), (2, 4), (3, 4))
        assert middle.leaves() == ()

    def test_empty_vertex_set(self, hybrid_5_2_4: Domain) -> None:
        """A graph needs a vertex."""
        with pytest.raises(EmptyVertexSetError):
            strong_conn_graph(hybrid_5_2_4, [])

    def test_to_dot(self, hybrid_5_2_4: Domain) -> None:
        """DOT output lists vertices and undirected edges."""
        dot = strong_conn_graph(hybrid_5_2_4).to_dot()

        assert dot.startswith("graph strong_connectedness {")
        assert "  a2 -- a4;" in dot
        assert dot.rstrip().endswith("}")


class TestVertexPaths:
    """Test suite for path enumeration."""

    def test_two_axis_paths(self, two_axis_domain: Domain) -> None:
        """Four a1-a6 paths, sorted lexicographically."""
        # Arrange
        graph = strong_conn_graph(two_axis_domain)

        # Act
        paths = all_vertex_paths(graph, 1, 6)

        # Assert
        assert [p.vertices for p in paths] == [
            (1, 2, 3, 4, 5, 6),
            (1, 2, 3, 5, 6),
            (1, 2, 4, 3, 5, 6),
            (1, 2, 4, 5, 6),
        ]

    def test_null_path(self, hybrid_5_2_4: Domain) -> None:
        """A path from a vertex to itself is the single vertex."""
        graph = strong_conn_graph(hybrid_5_2_4)

        assert all_vertex_paths(graph, 3, 3) == [VertexPath((3,))]

    def test_cap_overflow(self, two_axis_domain: Domain) -> None:
        """More paths than the cap raise."""
        graph = strong_conn_graph(two_axis_domain)

        with pytest.raises(EnumerationOverflowError):
            all_vertex_paths(graph, 1, 6, cap=3)

    def test_unknown_endpoint(self, hybrid_5_2_4: Domain) -> None:
        """Endpoints must be vertices."""
        graph = strong_conn_graph(hybrid_5_2_4, range(2, 5))

        with pytest.raises(EmptyVertexSetError):
            all_vertex_paths(graph, 1, 4)

    def test_path_rejects_repeats(self) -> None:
        """Paths do not revisit a vertex."""
        with pytest.raises(InvalidPreferenceError):
            VertexPath((1, 2, 1))

    def test_path_on_graph_checks_edges(self, hybrid_5_2_4: Domain) -> None:
        """Every step must be an edge."""
        # Arrange
        graph = strong_conn_graph(hybrid_5_2_4)

        # Act
        path = VertexPath.on(graph, [1, 2, 4, 5])

        # Assert
        assert (path.start, path.end, len(path)) == (1, 5, 4)
        assert path.segment(2, 5) == (2, 4, 5)
        assert 4 in path and 3 not in path
        with pytest.raises(InvalidPreferenceError):
            VertexPath.on(graph, [1, 3])


class TestHybridStar:
    """Test suite for the hybrid* conditions."""

    def test_hybrid_domain_is_hybrid_star(self, hybrid_5_2_4: Domain) -> None:
        """The full hybrid domain passes every condition."""
        report = is_hybrid_star(hybrid_5_2_4, 2, 4)

        assert report.holds
        assert bool(report)

    def test_two_axis_domain_is_hybrid_star(self, two_axis_domain: Domain) -> None:
        """The union of two axes is hybrid* for (2, 5)."""
        assert is_hybrid_star(two_axis_domain, 2, 5)

    def test_single_peaked_middle_has_leaves(self) -> None:
        """A line through the middle leaves its ends as leaves."""
        # Act
        report = is_hybrid_star(gen_single_peaked(5), 2, 4)

        # Assert
        assert not report
        assert report.outside_hybrid == ()
        assert report.uncovered == ()
        assert report.leaves == (2, 4)

    def test_preferences_outside_hybrid(self, hybrid_5_2_4: Domain) -> None:
        """Orders outside the thresholds' hybrid domain are listed."""
        report = is_hybrid_star(hybrid_5_2_4, 1, 3)

        assert report.outside_hybrid
        assert not report
