"""Membership in the family of graphs with connected non-cut hyperspace.

A finite graph has a connected hyperspace of non-cut subcontinua exactly when
it is an arc, a tangle (graph without cut points), a tangle with a sticker,
the junction of two tangles, or two disjoint tangles joined by an arc.  On a
smoothed graph this reads: the block-cut tree is a path and every tangle
block carries at most one cut vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .cuts import TANGLE, BlockCutTree, block_cut_tree
from .graph import AtVertex, GraphPoint, OnEdge, TopoGraph, components_at_point, is_circle, smooth
from .region import Region, complement_component_of, complement_components, is_noncut

__all__ = [
    "Form",
    "NotFTReason",
    "FTClassification",
    "Lemma5Witness",
    "classify",
    "ncstar_connected",
    "ncstar_compact",
    "ncstar_equals_C",
    "lemma5_witness",
    "validate_witness",
]


class Form(str, Enum):
    ARC = "Arc"
    TANGLE = "Tangle"
    TANGLE_WITH_STICKER = "TangleWithSticker"
    JUNCTION_OF_TWO_TANGLES = "JunctionOfTwoTangles"
    TWO_TANGLES_JOINED_BY_ARC = "TwoTanglesJoinedByArc"
    NOT_FT = "NotFT"


CUT_VERTEX_WITH_THREE_COMPONENTS = "CutVertexWithThreeComponents"
TANGLE_BLOCK_WITH_TWO_CUT_VERTICES = "TangleBlockWithTwoCutVertices"
BLOCK_TREE_NOT_A_PATH = "BlockTreeNotAPath"
MORE_THAN_TWO_TANGLE_BLOCKS = "MoreThanTwoTangleBlocks"


@dataclass(frozen=True)
class NotFTReason:
    kind: str
    vertex: int | None = None
    block: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FTClassification:
    """Verdict plus decomposition, expressed in the ids of ``graph`` (the smoothed input).

    ``tangles`` holds K (and M); ``arc`` the bridge edges from K towards M or
    the free end; ``junctions`` the attaching points: ``(p,)`` for a
    junction, ``(p, tip)`` for a sticker, ``(p, q)`` for two tangles joined
    by an arc, the two ends for an arc.
    """

    verdict: Form
    graph: TopoGraph
    is_simple_closed_curve: bool = False
    tangles: tuple[tuple[int, ...], ...] = ()
    arc: tuple[int, ...] = ()
    junctions: tuple[int, ...] = ()
    reason: NotFTReason | None = None
    tree: BlockCutTree | None = field(default=None, compare=False, repr=False)

    @property
    def in_ft(self) -> bool:
        return self.verdict is not Form.NOT_FT


def _first_branching_vertex(G: TopoGraph) -> int | None:
    for v in G.vertices:
        if components_at_point(G, AtVertex(v)) >= 3:
            return v
    return None


def _not_ft(G, bct, reason) -> FTClassification:
    return FTClassification(Form.NOT_FT, G, reason=reason, tree=bct)


def _bridge_run(bct: BlockCutTree, start_cut: int, stop_blocks: set[int]) -> tuple[list[int], int]:
    """Walk bridges along the path-shaped tree from ``start_cut``.

    Returns the bridge edges in order and the vertex where the walk stops
    (a cut vertex of a block in ``stop_blocks`` or a free end).
    """
    G = bct.graph
    edges: list[int] = []
    seen: set[int] = set()
    here = start_cut
    while True:
        nxt = [b for b in bct.blocks_at(here) if b not in seen and b not in stop_blocks]
        nxt = [b for b in nxt if bct.kinds[b] != TANGLE]
        if not nxt:
            return edges, here
        b = nxt[0]
        seen.add(b)
        e = bct.blocks[b][0]
        edges.append(e)
        u, v = G.edges[e]
        here = v if u == here else u
        if here not in bct.cut_vertices:
            return edges, here


def classify(G: TopoGraph) -> FTClassification:
    S = smooth(G)
    bct = block_cut_tree(S)
    n_blocks = len(bct.blocks)
    if n_blocks == 1:
        if bct.kinds[0] == TANGLE:
            return FTClassification(Form.TANGLE, S, is_circle(S), tangles=(bct.blocks[0],), tree=bct)
        return FTClassification(Form.ARC, S, arc=bct.blocks[0], junctions=S.edges[0], tree=bct)

    v = _first_branching_vertex(S)
    if v is not None:
        return _not_ft(S, bct, NotFTReason(CUT_VERTEX_WITH_THREE_COMPONENTS, vertex=v))
    for i in bct.tangle_blocks:
        if len(bct.cuts_of(i)) >= 2:
            return _not_ft(S, bct, NotFTReason(TANGLE_BLOCK_WITH_TWO_CUT_VERTICES, block=bct.blocks[i]))
    # unreachable once the two tests above pass; kept as diagnostics
    if not bct.is_path():
        return _not_ft(S, bct, NotFTReason(BLOCK_TREE_NOT_A_PATH))
    tangles = bct.tangle_blocks
    if len(tangles) > 2:
        return _not_ft(S, bct, NotFTReason(MORE_THAN_TWO_TANGLE_BLOCKS))

    if not tangles:
        # smoothing leaves no degree-2 vertex, so a path of bridges is one edge
        return FTClassification(Form.ARC, S, arc=tuple(e for b in bct.blocks for e in b), tree=bct)
    K = tangles[0]
    (p,) = bct.cuts_of(K)
    if len(tangles) == 1:
        arc, tip = _bridge_run(bct, p, {K})
        return FTClassification(
            Form.TANGLE_WITH_STICKER, S, tangles=(bct.blocks[K],), arc=tuple(arc), junctions=(p, tip), tree=bct
        )
    M = tangles[1]
    (q,) = bct.cuts_of(M)
    if p == q:
        return FTClassification(
            Form.JUNCTION_OF_TWO_TANGLES, S, tangles=(bct.blocks[K], bct.blocks[M]), junctions=(p,), tree=bct
        )
    arc, end = _bridge_run(bct, p, {K, M})
    assert end == q
    return FTClassification(
        Form.TWO_TANGLES_JOINED_BY_ARC,
        S,
        tangles=(bct.blocks[K], bct.blocks[M]),
        arc=tuple(arc),
        junctions=(p, q),
        tree=bct,
    )


def ncstar_connected(G: TopoGraph) -> bool:
    return classify(G).in_ft


def ncstar_compact(G: TopoGraph) -> bool:
    S = smooth(G)
    return is_circle(S) or (len(S.edges) == 1 and S.edges[0][0] != S.edges[0][1])


def ncstar_equals_C(G: TopoGraph) -> bool:
    return is_circle(smooth(G))


@dataclass(frozen=True)
class Lemma5Witness:
    """A point whose removal leaves at least three components.

    The non-cut subcontinua inside the first component form a nonempty
    proper subset of the hyperspace that is both open and closed.
    """

    p: GraphPoint
    component_representatives: tuple[GraphPoint, ...]
    separating_family: str


def _noncut_candidates(G: TopoGraph, p: int):
    for v in G.vertices:
        if v != p and components_at_point(G, AtVertex(v)) == 1:
            yield AtVertex(v)
    for e in range(len(G.edges)):
        mid = OnEdge(e, 1 / 2)
        if components_at_point(G, mid) == 1:
            yield mid


def lemma5_witness(G: TopoGraph) -> Lemma5Witness | None:
    v = _first_branching_vertex(G)
    if v is None:
        return None
    removed = Region.point(G, AtVertex(v))
    count = complement_components(G, removed).component_count
    reps: dict[int, GraphPoint] = {}
    for x in _noncut_candidates(G, v):
        reps.setdefault(complement_component_of(G, removed, x), x)
    if len(reps) != count:
        # every component holds a non-cut point; fall back to any point if not found
        for i, x in enumerate(complement_components(G, removed).representatives):
            reps.setdefault(i, x)
    ordered = tuple(reps[i] for i in sorted(reps))
    family = f"non-cut subcontinua contained in the component of G minus vertex {v} that holds {ordered[0]}"
    return Lemma5Witness(AtVertex(v), ordered, family)


def validate_witness(G: TopoGraph, w: Lemma5Witness) -> bool:
    """Independent recheck: >= 3 components, one non-cut representative in each."""
    if components_at_point(G, w.p) < 3 or len(w.component_representatives) < 3:
        return False
    removed = Region.point(G, w.p)
    seen = set()
    for x in w.component_representatives:
        c = complement_component_of(G, removed, x)
        if c is None or c in seen or not is_noncut(G, Region.point(G, x)):
            return False
        seen.add(c)
    return True
