"""
Tests for src/webdiagram/diagram.py
"""

import pytest

from src.exceptions import WebDiagramException
from src.webdiagram import build_web
from src.webdiagram.diagram import grid_node, terminal_node


class TestBuildWeb:
    """Test construction and parameter validation"""

    @pytest.mark.parametrize("k,n", [(0, 4), (4, 4), (5, 4), (-1, 3)])
    def test_invalid_parameters(self, k, n):
        with pytest.raises(WebDiagramException) as exc_info:
            build_web(k, n)

        assert exc_info.value.k == k
        assert exc_info.value.n == n

    def test_non_integer(self):
        with pytest.raises(WebDiagramException):
            build_web(2.0, 5)

    def test_equal_parameters_give_equal_diagrams(self):
        assert build_web(3, 6) == build_web(3, 6)
        assert hash(build_web(3, 6)) == hash(build_web(3, 6))


class TestRegions:
    """Test region bookkeeping"""

    def test_web_2_4(self):
        w = build_web(2, 4)
        assert [r.grid_index for r in w.regions] == [(1, 3), (1, 4), (2, 3), (2, 4)]
        assert w.region_order() == [(1, 4)]
        assert w.inner_dim == 1

    @pytest.mark.parametrize(
        "k,n,regions,inner",
        [(2, 5, 6, 2), (3, 6, 9, 4), (3, 7, 12, 6), (1, 4, 3, 0), (3, 4, 3, 0)],
    )
    def test_counts(self, k, n, regions, inner):
        """k(n-k) regions, (k-1)(n-k-1) of them inner"""
        w = build_web(k, n)
        assert len(w.regions) == regions
        assert len(w.inner_regions) == inner
        assert w.inner_dim == inner
        assert len(w.outer_regions) == regions - inner

    def test_inner_order_is_row_major(self):
        w = build_web(3, 6)
        assert w.region_order() == [(1, 5), (1, 6), (2, 5), (2, 6)]
        assert w.inner_position[(2, 5)] == 2

    def test_sources_and_sinks(self):
        w = build_web(3, 7)
        assert w.sources == (1, 2, 3)
        assert w.sinks == (4, 5, 6, 7)
        assert w.is_region(3, 4)
        assert not w.is_region(3, 3)


class TestGraph:
    """Test the directed grid graph"""

    def test_edges(self):
        w = build_web(2, 4)
        g = w.graph
        assert g.has_edge(terminal_node(1), grid_node(1, 3))
        assert g.has_edge(grid_node(1, 3), grid_node(1, 4))
        assert g.has_edge(grid_node(1, 3), grid_node(2, 3))
        assert g.has_edge(grid_node(2, 4), terminal_node(4))
        assert not g.has_edge(grid_node(1, 4), grid_node(1, 3))

    def test_size(self):
        """k(n-k) grid vertices plus n terminals"""
        assert build_web(3, 6).graph.number_of_nodes() == 9 + 6

    def test_acyclic(self):
        import networkx as nx

        assert nx.is_directed_acyclic_graph(build_web(3, 7).graph)


class TestRendering:
    def test_render_text(self):
        text = build_web(2, 4).render_text()
        lines = text.splitlines()
        assert len(lines) == 5
        assert lines[0].endswith("-> 1")
        assert "x1" in lines[1]
        assert "v4" in lines[-1] and "v3" in lines[-1]

    def test_document(self):
        doc = build_web(2, 4).to_document()
        assert doc.k == 2
        assert [r.inner for r in doc.regions] == [False, True, False, False]
