from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncstar import AtVertex, OnEdge, build_graph, point_distance, smooth, subdivide
from ncstar.errors import Disconnected, EmptyGraph, InvalidPoint, SubdivisionTooCoarse
from ncstar.graph import components_at_point, is_circle
from ncstar.atlas import canonical_form

import oracles
from zoo import EDGES, cycle_graph, graph, path_graph


def test_build_arc_and_loop():
    G = build_graph([(0, 1)])
    assert G.n_vertices == 2 and G.edges == ((0, 1),)
    L = build_graph([(0, 0)])
    assert L.n_vertices == 1 and L.edges == ((0, 0),)


def test_build_rejects_disconnected_and_empty():
    with pytest.raises(Disconnected):
        build_graph([(0, 1), (2, 3)])
    with pytest.raises(EmptyGraph):
        build_graph([])


def test_vertex_ids_normalized_edge_order_kept():
    G = build_graph([(7, 3), (3, 10)])
    assert G.edges == ((1, 0), (0, 2))


def test_smooth_examples():
    assert smooth(path_graph(3)).edges == ((0, 1),)
    assert smooth(cycle_graph(4)).edges == ((0, 0),)
    assert smooth(graph("TRIOD")) == graph("TRIOD")


def test_smooth_idempotent():
    for name in EDGES:
        S = smooth(graph(name))
        assert smooth(S) == S


def test_subdivide_examples():
    sub, _ = subdivide(graph("LOOP"), 3)
    assert sub.n_vertices == 3 and is_circle(sub) and len(sub.edges) == 3
    sub, _ = subdivide(graph("ARC1"), 2)
    assert sub.edges == ((0, 2), (2, 1))
    sub, M = subdivide(graph("FIG8"), 2)
    assert sub.n_vertices == 3
    assert sorted(tuple(sorted(e)) for e in sub.edges) == [(0, 1), (0, 1), (0, 2), (0, 2)]
    assert M.chains[0].vertices == (0, 1, 0)


def test_subdivide_needs_k_at_least_two():
    with pytest.raises(SubdivisionTooCoarse):
        subdivide(graph("ARC1"), 1)


@pytest.mark.parametrize("name", sorted(EDGES))
@pytest.mark.parametrize("k", [2, 3])
def test_subdivide_then_smooth_is_isomorphic(name, k):
    G = graph(name)
    sub, _ = subdivide(G, k)
    assert canonical_form(smooth(sub).edges) == canonical_form(smooth(G).edges)


def test_point_distance_examples():
    assert point_distance(graph("ARC1"), AtVertex(0), AtVertex(1)) == 1
    L = graph("LOOP")
    assert point_distance(L, OnEdge(0, Fraction(1, 4)), OnEdge(0, Fraction(3, 4))) == Fraction(1, 2)
    assert point_distance(graph("TRIOD"), AtVertex(1), AtVertex(2)) == 2


def test_on_edge_rejects_endpoints():
    with pytest.raises(InvalidPoint):
        OnEdge(0, 0)
    with pytest.raises(InvalidPoint):
        OnEdge(0, Fraction(1))


def test_components_at_point_examples():
    assert components_at_point(graph("TRIOD"), AtVertex(0)) == 3
    assert components_at_point(graph("ARC1"), OnEdge(0, Fraction(1, 2))) == 2
    assert components_at_point(graph("FIG8"), AtVertex(0)) == 2


def _grid_node(x, n):
    if isinstance(x, AtVertex):
        return ("v", x.vertex)
    return ("e", x.edge, int(x.position * n))


@pytest.mark.parametrize("name", sorted(EDGES))
def test_components_match_grid_oracle(name):
    G = graph(name)
    pts = [AtVertex(v) for v in G.vertices] + [OnEdge(e, Fraction(1, 2)) for e in range(len(G.edges))]
    for x in pts:
        assert components_at_point(G, x) == oracles.point_components(G.edges, _grid_node(x, 4))


def _points(G):
    return st.one_of(
        st.sampled_from([AtVertex(v) for v in G.vertices]),
        st.builds(
            OnEdge,
            st.integers(0, len(G.edges) - 1),
            st.integers(1, 15).map(lambda j: Fraction(j, 16)),
        ),
    )


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_point_distance_metric_axioms(data):
    G = graph(data.draw(st.sampled_from(sorted(EDGES))))
    x, y, z = (data.draw(_points(G)) for _ in range(3))
    d = point_distance
    assert d(G, x, x) == 0
    assert d(G, x, y) == d(G, y, x)
    assert d(G, x, z) <= d(G, x, y) + d(G, y, z)
    if x != y:
        assert d(G, x, y) > 0


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_point_distance_matches_grid(data):
    G = graph(data.draw(st.sampled_from(sorted(EDGES))))
    n = 16
    x, y = data.draw(_points(G)), data.draw(_points(G))
    adj = oracles.grid(G.edges, n)
    dist = oracles.bfs(adj, [_grid_node(x, n)])
    assert point_distance(G, x, y) == Fraction(dist[_grid_node(y, n)], n)
