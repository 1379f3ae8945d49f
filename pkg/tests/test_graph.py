from __future__ import annotations

import pytest

from uncrossed import (
    FormatError,
    Graph,
    complete_bipartite,
    complete_graph,
    format_edge_list,
    is_connected,
    parse_edge_list,
)
from uncrossed.graph import connected_components, normalize_edge


def test_normalize_edge_orders_endpoints():
    assert normalize_edge(3, 1) == (1, 3)
    assert normalize_edge(1, 3) == (1, 3)


def test_graph_normalizes_and_dedups():
    g = Graph(4, [(2, 0), (0, 2), (3, 1)])
    assert g.sorted_edges == ((0, 2), (1, 3))
    assert g.m == 2


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_graph_coloring_validation():
    # black side is 0..black_count-1; edges must go across
    g = complete_bipartite(2, 3)
    assert g.black_count == 2
    assert list(g.blacks) == [0, 1]
    assert list(g.whites) == [2, 3, 4]
    with pytest.raises(ValueError):
        Graph(4, [(0, 1)], black_count=2)


def test_complete_graph_counts():
    for n in range(1, 8):
        g = complete_graph(n)
        assert g.n == n
        assert g.m == n * (n - 1) // 2


def test_complete_bipartite_counts():
    g = complete_bipartite(3, 4)
    assert g.n == 7
    assert g.m == 12
    assert all(u < 3 <= v for u, v in g.sorted_edges)


def test_neighbors_and_degree():
    g = Graph(4, [(0, 1), (0, 2), (2, 3)])
    assert g.neighbors(0) == (1, 2)
    assert g.degree(2) == 2
    assert g.has_edge(1, 0)
    assert not g.has_edge(1, 3)


def test_connected_components_sorted_by_min_vertex():
    comps = connected_components(6, [(4, 5), (0, 1), (1, 2)])
    assert [list(c) for c in comps] == [[0, 1, 2], [3], [4, 5]]
    g = Graph(6, [(4, 5), (0, 1), (1, 2)])
    assert not is_connected(g)
    assert is_connected(Graph(1, []))


def test_parse_edge_list_roundtrip():
    g = Graph(5, [(0, 4), (1, 2)])
    text = format_edge_list(g)
    back = parse_edge_list(text)
    assert back == g


def test_parse_edge_list_colored_roundtrip():
    g = complete_bipartite(2, 2)
    back = parse_edge_list(format_edge_list(g))
    assert back.black_count == 2
    assert back == g


def test_parse_edge_list_rejects_garbage():
    with pytest.raises(FormatError):
        parse_edge_list("nonsense\n")
    with pytest.raises(FormatError):
        parse_edge_list("2 1\n0 1\n0 1 extra\n")
    with pytest.raises(FormatError):
        parse_edge_list("2 2\n0 1\n")  # header promises two edges
