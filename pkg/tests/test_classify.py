import pytest

from ncstar import (
    AtVertex,
    Form,
    build_graph,
    classify,
    is_tangle,
    lemma5_witness,
    ncstar_compact,
    ncstar_connected,
    ncstar_equals_C,
    subdivide,
    validate_witness,
)
from ncstar.atlas import connected_multigraphs

from zoo import EDGES, cycle_graph, graph


def test_dumbbell_two_tangles_joined():
    c = classify(graph("DUMBBELL"))
    assert c.verdict is Form.TWO_TANGLES_JOINED_BY_ARC
    assert c.tangles == ((0,), (2,)) and c.arc == (1,) and c.junctions == (0, 1)


def test_fig8_junction():
    c = classify(graph("FIG8"))
    assert c.verdict is Form.JUNCTION_OF_TWO_TANGLES and c.junctions == (0,)


def test_lollipop_sticker():
    c = classify(graph("LOLLIPOP"))
    assert c.verdict is Form.TANGLE_WITH_STICKER
    assert c.tangles == ((0,),) and c.arc == (1,) and c.junctions == (0, 1)


def test_triod_not_ft_at_center():
    c = classify(graph("TRIOD"))
    assert c.verdict is Form.NOT_FT
    assert c.reason.kind == "CutVertexWithThreeComponents" and c.reason.vertex == 0


def test_cricket_not_ft_circle_block():
    c = classify(graph("CRICKET"))
    assert c.reason.kind == "TangleBlockWithTwoCutVertices" and c.reason.block == (0, 1)


def test_arc_and_tangles():
    assert classify(graph("ARC1")).verdict is Form.ARC
    assert classify(cycle_graph(5)).verdict is Form.TANGLE
    loop = classify(graph("LOOP"))
    assert loop.verdict is Form.TANGLE and loop.is_simple_closed_curve
    assert classify(graph("K4")).verdict is Form.TANGLE
    assert not classify(graph("THETA")).is_simple_closed_curve


def test_long_sticker_through_degree_two_vertices():
    # loop with a 3-edge tail smooths to a lollipop
    G = build_graph([(0, 0), (0, 1), (1, 2), (2, 3)])
    assert classify(G).verdict is Form.TANGLE_WITH_STICKER


def test_predicates():
    assert ncstar_connected(graph("ARC1")) and ncstar_connected(graph("DUMBBELL"))
    assert not ncstar_connected(graph("TRIOD"))
    assert ncstar_compact(graph("ARC1")) and ncstar_compact(graph("LOOP"))
    assert not ncstar_compact(graph("THETA"))
    assert ncstar_equals_C(graph("LOOP")) and ncstar_equals_C(cycle_graph(4))
    assert not ncstar_equals_C(graph("ARC1")) and not ncstar_equals_C(graph("K4"))


def test_lemma5_witness_examples():
    w = lemma5_witness(graph("TRIOD"))
    assert w.p == AtVertex(0)
    assert w.component_representatives == (AtVertex(1), AtVertex(2), AtVertex(3))
    assert validate_witness(graph("TRIOD"), w)
    w4 = lemma5_witness(graph("STAR4"))
    assert len(w4.component_representatives) == 4 and validate_witness(graph("STAR4"), w4)
    assert lemma5_witness(cycle_graph(4)) is None


def test_witness_on_cycles_uses_midpoints():
    # TRIOD with its legs closed into loops: no leaves, representatives on the loops
    G = build_graph([(0, 0), (0, 0), (0, 0)])
    w = lemma5_witness(G)
    assert w is not None and validate_witness(G, w)


ATLAS = [build_graph(e) for e in connected_multigraphs(4)]


@pytest.mark.parametrize("G", ATLAS, ids=lambda G: str(list(G.edges)))
def test_atlas_properties(G):
    c = classify(G)
    for k in (2, 3, 4):
        assert classify(subdivide(G, k)[0]).verdict == c.verdict
    if ncstar_compact(G):
        assert c.in_ft
    w = lemma5_witness(G)
    if w is not None:
        assert not c.in_ft and validate_witness(G, w)
    if c.verdict in (Form.TANGLE_WITH_STICKER, Form.JUNCTION_OF_TWO_TANGLES, Form.TWO_TANGLES_JOINED_BY_ARC):
        S = c.graph
        for t in c.tangles:
            assert is_tangle(build_graph([S.edges[e] for e in t]))
        if c.arc:
            arc_vertices = {x for e in c.arc for x in S.edges[e]}
            K = {x for e in c.tangles[0] for x in S.edges[e]}
            assert arc_vertices & K == {c.junctions[0]}
        if c.verdict is Form.TWO_TANGLES_JOINED_BY_ARC:
            M = {x for e in c.tangles[1] for x in S.edges[e]}
            assert arc_vertices & M == {c.junctions[1]}


@pytest.mark.parametrize("name", sorted(EDGES))
def test_named_graphs_stable_under_subdivision(name):
    G = graph(name)
    for k in (2, 3):
        assert classify(subdivide(G, k)[0]).verdict == classify(G).verdict
