import pytest

from ncstar import AtVertex, OnEdge, block_cut_tree, build_graph, is_tangle, smooth, subdivide, topological_cut_points
from ncstar.cuts import BRIDGE, TANGLE
from ncstar.graph import components_at_point, is_circle

from zoo import EDGES, graph


def test_dumbbell_blocks():
    bct = block_cut_tree(graph("DUMBBELL"))
    assert bct.blocks == ((0,), (1,), (2,))
    assert bct.kinds == (TANGLE, BRIDGE, TANGLE)
    assert bct.cut_vertices == (0, 1)
    assert bct.is_path()


def test_theta_single_block():
    bct = block_cut_tree(graph("THETA"))
    assert bct.blocks == ((0, 1, 2),) and bct.kinds == (TANGLE,)
    assert bct.cut_vertices == ()


def test_triod_star():
    bct = block_cut_tree(graph("TRIOD"))
    assert bct.kinds == (BRIDGE,) * 3
    assert bct.cut_vertices == (0,)
    assert not bct.is_path()


def test_parallel_edges_are_not_bridges():
    bct = block_cut_tree(graph("CRICKET"))
    assert bct.blocks[0] == (0, 1) and bct.kinds[0] == TANGLE


def test_cut_point_summaries():
    assert topological_cut_points(graph("LOOP")).is_empty()
    arc = topological_cut_points(graph("ARC1"))
    assert arc.bridge_edges == (0,) and not arc.cut_vertices and arc.noncut_vertices == {0, 1}
    lolli = topological_cut_points(graph("LOLLIPOP"))
    assert lolli.cut_vertices == {0} and lolli.bridge_edges == (1,)


def test_is_tangle_examples():
    assert is_tangle(graph("THETA"))
    assert is_tangle(graph("K4"))
    assert not is_tangle(graph("LOLLIPOP"))


def _pointwise_tangle(G):
    pts = [AtVertex(v) for v in G.vertices] + [OnEdge(e, 1 / 2) for e in range(len(G.edges))]
    return all(components_at_point(G, x) == 1 for x in pts)


@pytest.mark.parametrize("name", sorted(EDGES))
def test_tangle_two_ways(name):
    G = graph(name)
    assert is_tangle(G) == _pointwise_tangle(G)


@pytest.mark.parametrize("name", sorted(EDGES))
def test_block_invariants(name):
    G = graph(name)
    bct = block_cut_tree(G)
    assert sorted(e for b in bct.blocks for e in b) == list(range(len(G.edges)))
    owners = {v: sum(v in bct.block_vertices(i) for i in range(len(bct.blocks))) for v in G.vertices}
    assert set(bct.cut_vertices) == {v for v, c in owners.items() if c >= 2}
    # tree: connected and acyclic, nodes = blocks + cut vertices
    assert len(bct.tree) == len(bct.blocks) + len(bct.cut_vertices) - 1
    for i, kind in enumerate(bct.kinds):
        if kind == TANGLE:
            block = build_graph([G.edges[e] for e in bct.blocks[i]])
            assert is_tangle(block)


@pytest.mark.parametrize("name", sorted(EDGES))
@pytest.mark.parametrize("k", [2, 3])
def test_tangle_invariant_under_subdivide_and_smooth(name, k):
    G = graph(name)
    assert is_tangle(subdivide(G, k)[0]) == is_tangle(G) == is_tangle(smooth(G))


@pytest.mark.parametrize("name", sorted(EDGES))
def test_noncircle_tangles_have_no_ends_or_hanging_loops(name):
    G = smooth(graph(name))
    if is_tangle(G) and not is_circle(G):
        assert all(G.degree(v) >= 2 for v in G.vertices)
        assert block_cut_tree(G).cut_vertices == ()
