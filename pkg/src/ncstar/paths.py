"""Monotone paths of non-cut subgraphs from a start set up to the whole graph.

Paths are keyframed: every keyframe is a non-cut subgraph of the subdivided
graph and each one grows out of the previous by a single star move.  For a
tangle the builder can keep a chosen vertex ``p`` out of every keyframe but
the last one.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ._util import bits, popcount
from .classify import Form, classify
from .cuts import is_tangle
from .errors import (
    GraphMismatch,
    InternalInvariantViolation,
    InvalidStart,
    NotATangle,
    NotInFT,
    PointInsideA,
    SubdivisionTooCoarse,
)
from .graph import Chain, EdgeMap, TopoGraph, walk_chains
from .hyperspace import discretize, star_move_adjacent
from .region import is_noncut, region_from_subgraph
from .subgraph import Subgraph, bitgraph

__all__ = [
    "FrontierAnalysis",
    "NCPath",
    "VerificationReport",
    "frontier_analysis",
    "tangle_path",
    "ft_path",
    "verify_path",
]

CASE1 = "Case1TwoSided"
CASE2 = "Case2Sweep"
CLAIM1 = "Claim1Gamma"
EDGE_SWEEP = "EdgeSweep(sigma2)"


def _stage(name: str) -> str:
    return f"TangleStage({name})"


@dataclass(frozen=True)
class NCPath:
    keyframes: tuple[Subgraph, ...]
    stage_labels: tuple[str, ...]
    avoid: int | None = None

    def __len__(self) -> int:
        return len(self.keyframes)


@dataclass(frozen=True)
class FrontierAnalysis:
    """Where the complement ``U`` of ``A`` touches ``A`` through branch vertices.

    ``S`` lists the branch vertices of ``U`` that start a chain running into
    ``A``; ``D_star[w]`` is the union of those initial pieces (``w`` plus the
    chain vertices and edges up to the first vertex of ``A``).
    """

    U: Subgraph
    S: tuple[int, ...]
    D_star: dict[int, Subgraph] = field(compare=False)
    S_star: tuple[int, ...]
    chosen_w0: int | None
    branches: dict[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]] = field(compare=False, repr=False)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    index: int | None = None
    violation: str | None = None


class _Frame:
    """A sub-universe (edge set with its vertices) of the subdivided graph."""

    def __init__(self, G: TopoGraph, universe: Subgraph):
        self.graph = G
        self.bg = bitgraph(G)
        self.universe = universe
        branch, chains = walk_chains(G, list(bits(universe.edge_bits)))
        self.branch_mask = sum(1 << w for w in branch)
        self.circle = not branch
        self.ends_at: dict[int, list[Chain]] = {w: [] for w in branch}
        for c in chains:
            if c.vertices[0] in self.ends_at:
                self.ends_at[c.vertices[0]].append(c)
            if c.vertices[-1] in self.ends_at:
                self.ends_at[c.vertices[-1]].append(Chain(c.vertices[::-1], c.edges[::-1]))


class _Builder:
    def __init__(self, bg, start: Subgraph):
        self.bg = bg
        self.keyframes = [start]
        self.labels: list[str] = []

    @property
    def current(self) -> Subgraph:
        return self.keyframes[-1]

    def add(self, vertex_bits: int, edge_bits: int, label: str) -> None:
        cur = self.current
        nxt = Subgraph(cur.vertex_bits | vertex_bits, cur.edge_bits | edge_bits)
        if nxt == cur:
            raise InternalInvariantViolation("empty move")
        self.keyframes.append(nxt)
        self.labels.append(label)


def _analyze(frame: _Frame, A: Subgraph, p: int | None) -> FrontierAnalysis:
    free_v = frame.universe.vertex_bits & ~A.vertex_bits
    U = Subgraph(free_v, frame.universe.edge_bits & ~A.edge_bits)
    S, D_star, branches = [], {}, {}
    for w in bits(free_v & frame.branch_mask):
        found = []
        for c in frame.ends_at[w]:
            hit = next((i for i in range(1, len(c.vertices)) if c.vertices[i] in A), None)
            if hit is not None:
                found.append((c.vertices[1:hit], c.edges[:hit]))
        if not found:
            continue
        S.append(w)
        branches[w] = tuple(sorted(found, key=lambda b: b[1][0]))
        D_star[w] = Subgraph.of([w, *(x for inner, _ in found for x in inner)], [e for _, es in found for e in es])
    seen = Subgraph(0)
    for w in S:
        d = D_star[w]
        if (d & seen) != Subgraph(0):
            raise InternalInvariantViolation(f"D*({w}) overlaps another D* outside A")
        seen = seen | d
    S_star = tuple(w for w in S if p is None or p not in D_star[w])
    chosen = None
    if len(S) >= 2:
        for w in S_star:
            if frame.bg.complement_connected(A | D_star[w], frame.universe.vertex_bits, frame.universe.edge_bits):
                chosen = w
                break
    return FrontierAnalysis(U, tuple(S), D_star, S_star, chosen, branches)


def _sweep_branch(b: _Builder, inner, edges, label: str) -> None:
    # inner vertices are added from the A side back toward the branch vertex
    for i in range(len(inner) - 1, -1, -1):
        b.add(1 << inner[i], 1 << edges[i + 1], label)


def _sweep_star(b: _Builder, w: int, branches, label: str) -> None:
    for inner, edges in branches:
        _sweep_branch(b, inner, edges, label)
    b.add(1 << w, Subgraph.of(edges=[es[0] for _, es in branches]).edge_bits, label)


def _approach(b: _Builder, frame: _Frame, p: int | None, label: str) -> None:
    """Complement is an open arc: grow from both of its ends and meet at ``p``."""
    bg = frame.bg
    A = b.current
    free_v = frame.universe.vertex_bits & ~A.vertex_bits
    free_e = frame.universe.edge_bits & ~A.edge_bits
    entry = [e for e in bits(free_e) if bg.ends[e] & A.vertex_bits and bg.ends[e] & free_v]
    if not entry:
        raise InternalInvariantViolation("complement arc does not touch A")
    e = entry[0]
    x = (bg.ends[e] & free_v).bit_length() - 1
    xs, es = [x], [e]
    while True:
        nxt = [f for f in bits(bg.incident[x] & free_e) if f != es[-1]]
        if len(nxt) != 1:
            raise InternalInvariantViolation("complement is not an open arc")
        f = nxt[0]
        es.append(f)
        other = bg.ends[f] & ~(1 << x)
        if other & A.vertex_bits or other == 0:
            break
        x = other.bit_length() - 1
        xs.append(x)
    if sum(1 << v for v in xs) != free_v or sum(1 << f for f in es) != free_e:
        raise InternalInvariantViolation("complement is not an open arc")
    if p is None:
        p = xs[-1]
    if p not in xs:
        raise InternalInvariantViolation(f"vertex {p} is not in the complement arc")
    i = xs.index(p)
    for j in range(i):
        b.add(1 << xs[j], 1 << es[j], label)
    for j in range(len(xs) - 1, i, -1):
        b.add(1 << xs[j], 1 << es[j + 1], label)
    b.add(1 << p, 1 << es[i] | 1 << es[i + 1], label)


def _case2(b: _Builder, frame: _Frame, fa: FrontierAnalysis, p: int | None, label: str) -> bool:
    """One marked vertex ``v``; returns True when the universe is exhausted."""
    (v,) = fa.S
    branches = fa.branches[v]
    if len(branches) == 1:
        raise InternalInvariantViolation(f"only one branch at {v}; a tangle has no such vertex")
    if fa.U.vertex_bits != fa.D_star[v].vertex_bits or fa.U.edge_bits != fa.D_star[v].edge_bits:
        raise InternalInvariantViolation("complement is not covered by the branches at the marked vertex")
    if p is None or p == v:
        _sweep_star(b, v, branches, label)
        return True
    keep = [br for br in branches if p in br[0]]
    if len(keep) != 1:
        raise InternalInvariantViolation(f"vertex {p} lies on no branch at {v}")
    others = [br for br in branches if br is not keep[0]]
    _sweep_star(b, v, others, label)
    return False


def _tangle_stage(b: _Builder, frame: _Frame, p: int | None, stage: str | None = None) -> None:
    """Grow the current keyframe until it covers the frame, keeping ``p`` for last."""
    absorbed: set[int] = set()
    while True:
        A = b.current & frame.universe
        free_v = frame.universe.vertex_bits & ~A.vertex_bits
        free_e = frame.universe.edge_bits & ~A.edge_bits
        if not free_v and not free_e:
            return
        if not free_v:
            if popcount(free_e) != 1:
                raise InternalInvariantViolation("several open edges left in the complement")
            b.add(0, free_e, _stage(stage) if stage else CASE1)
            return
        if frame.circle or not free_v & frame.branch_mask:
            _approach(b, frame, p, _stage(stage) if stage else CASE1)
            return
        fa = _analyze(frame, A, p)
        if not fa.S:
            raise InternalInvariantViolation("no marked vertex in the complement")
        if len(fa.S) == 1:
            if _case2(b, frame, fa, p, _stage(stage) if stage else CASE2):
                return
            continue
        w0 = fa.chosen_w0
        if w0 is None:
            raise InternalInvariantViolation("no marked vertex leaves a connected complement")
        if w0 in absorbed:
            raise InternalInvariantViolation(f"vertex {w0} absorbed twice")
        absorbed.add(w0)
        _sweep_star(b, w0, fa.branches[w0], _stage(stage) if stage else CLAIM1)


def _discrete(G: TopoGraph, k: int):
    """``(base graph, subdivided graph, edge map)``; ``k == 1`` keeps ``G`` as is."""
    if k == 1:
        M = EdgeMap(1, G.n_vertices, tuple(Chain((u, v), (e,)) for e, (u, v) in enumerate(G.edges)))
        return G, G, M
    if k < 1:
        raise SubdivisionTooCoarse("k must be at least 1")
    return discretize(G, k)


def _check_start(bg, A: Subgraph) -> None:
    try:
        bg.check(A)
    except GraphMismatch as exc:
        raise InvalidStart(str(exc)) from exc
    if not bg.is_noncut(A):
        raise InvalidStart("start subgraph is not a non-cut continuum")


def frontier_analysis(G: TopoGraph, k: int, A: Subgraph, p: int | None = None) -> FrontierAnalysis:
    _, sub, _ = _discrete(G, k)
    bg = bitgraph(sub)
    _check_start(bg, A)
    return _analyze(_Frame(sub, bg.full), A, p)


def tangle_path(G: TopoGraph, k: int, A: Subgraph, p: int) -> NCPath:
    """Path from ``A`` to the whole graph with ``p`` only in the last keyframe.

    ``k == 1`` treats ``G`` itself as the subdivision (no smoothing).
    """
    S, sub, _ = _discrete(G, k)
    if not is_tangle(S):
        raise NotATangle("graph has a cut point")
    bg = bitgraph(sub)
    _check_start(bg, A)
    if not 0 <= p < sub.n_vertices:
        raise GraphMismatch(f"vertex {p} is not in the subdivided graph")
    if p in A:
        raise PointInsideA(f"vertex {p} already lies in the start set")
    b = _Builder(bg, A)
    _tangle_stage(b, _Frame(sub, bg.full), p)
    return NCPath(tuple(b.keyframes), tuple(b.labels), p)


def _universe(M: EdgeMap, edges) -> Subgraph:
    return Subgraph.of([x for e in edges for x in M.chains[e].vertices], [x for e in edges for x in M.chains[e].edges])


def _sweep_arc(b: _Builder, universe: Subgraph, label: str) -> None:
    """Grow one vertex at a time along a tree-shaped universe."""
    bg = b.bg
    while True:
        cur = b.current
        free_v = universe.vertex_bits & ~cur.vertex_bits
        free_e = universe.edge_bits & ~cur.edge_bits
        if not free_v:
            for e in bits(free_e):
                b.add(0, 1 << e, label)
            return
        step = next((e for e in bits(free_e) if bg.ends[e] & cur.vertex_bits and bg.ends[e] & free_v), None)
        if step is None:
            raise InternalInvariantViolation("arc sweep cannot reach the rest of the arc")
        b.add(bg.ends[step] & free_v, 1 << step, label)


def ft_path(G: TopoGraph, k: int, A: Subgraph) -> NCPath:
    """Path from ``A`` to the whole graph for a graph in the family.

    Works over ``subdivide(smooth(G), k)``; the stages follow the
    decomposition returned by :func:`~ncstar.classify.classify`.
    """
    cls = classify(G)
    if not cls.in_ft:
        raise NotInFT(f"graph is not in the family ({cls.reason.kind})")
    S, sub, M = _discrete(cls.graph, k)
    bg = bitgraph(sub)
    _check_start(bg, A)
    b = _Builder(bg, A)

    def tangle_stage(universe: Subgraph, avoid: int | None, name: str) -> None:
        _tangle_stage(b, _Frame(sub, universe), avoid, name)

    def inside(X: Subgraph, avoid: int | None = None) -> bool:
        return A.issubset(X) and (avoid is None or avoid not in A)

    form = cls.verdict
    if form is Form.ARC:
        _sweep_arc(b, bg.full, EDGE_SWEEP)
    elif form is Form.TANGLE:
        rest = bg.all_vertices & ~A.vertex_bits
        p = (rest & -rest).bit_length() - 1 if rest else None
        tangle_stage(bg.full, p, "sigma1")
    elif form is Form.TANGLE_WITH_STICKER:
        K, J = _universe(M, cls.tangles[0]), _universe(M, cls.arc)
        p = cls.junctions[0]
        if inside(K, p):
            tangle_stage(K, p, "sigma1")
            _sweep_arc(b, J, EDGE_SWEEP)
        elif inside(J, p):
            _sweep_arc(b, J, EDGE_SWEEP)
            tangle_stage(K, None, "sigma3")
        elif K.issubset(A):
            _sweep_arc(b, J, EDGE_SWEEP)
        elif J.issubset(A):
            tangle_stage(K, None, "xi")
        else:
            raise InternalInvariantViolation("start set fits no sticker case")
    elif form is Form.JUNCTION_OF_TWO_TANGLES:
        K, L = (_universe(M, t) for t in cls.tangles)
        (p,) = cls.junctions
        if inside(K, p):
            tangle_stage(K, p, "sigma1")
            tangle_stage(L, None, "sigma3")
        elif inside(L, p):
            tangle_stage(L, p, "sigma1")
            tangle_stage(K, None, "sigma3")
        elif K.issubset(A):
            tangle_stage(L, None, "xi")
        elif L.issubset(A):
            tangle_stage(K, None, "xi")
        else:
            raise InternalInvariantViolation("start set fits no junction case")
    else:
        K, L = (_universe(M, t) for t in cls.tangles)
        J = _universe(M, cls.arc)
        p, q = cls.junctions
        if inside(K, p):
            tangle_stage(K, p, "sigma1")
            _sweep_arc(b, J, EDGE_SWEEP)
            tangle_stage(L, None, "sigma3")
        elif inside(L, q):
            tangle_stage(L, q, "sigma1")
            _sweep_arc(b, J, EDGE_SWEEP)
            tangle_stage(K, None, "sigma3")
        elif K.issubset(A):
            _sweep_arc(b, J, EDGE_SWEEP)
            tangle_stage(L, None, "lambda" if (A & L).is_empty() or A & L == Subgraph(1 << q) else "xi")
        elif L.issubset(A):
            _sweep_arc(b, J, EDGE_SWEEP)
            tangle_stage(K, None, "lambda" if (A & K).is_empty() or A & K == Subgraph(1 << p) else "xi")
        else:
            raise InternalInvariantViolation("start set fits no case for two joined tangles")
    if b.current != bg.full:
        raise InternalInvariantViolation("stages finished short of the whole graph")
    return NCPath(tuple(b.keyframes), tuple(b.labels), None)


def verify_path(G: TopoGraph, k: int, path: NCPath, start: Subgraph | None = None) -> VerificationReport:
    """Recheck a path from scratch using exact region geometry.

    Non-cut membership goes through the continuous model (realized regions on
    the base graph), not through the bitset shortcuts the builder uses.
    """
    S, sub, M = _discrete(G, k)
    bg = bitgraph(sub)
    frames = path.keyframes
    if not frames:
        return VerificationReport(False, 0, "EmptyPath")
    if len(path.stage_labels) != len(frames) - 1:
        return VerificationReport(False, 0, "LabelCount")
    last = len(frames) - 1
    for i, D in enumerate(frames):
        try:
            bg.check(D)
        except GraphMismatch:
            return VerificationReport(False, i, "GraphMismatch")
        if not bg.is_valid(D):
            return VerificationReport(False, i, "InvalidSubgraph")
        if not is_noncut(S, region_from_subgraph(S, M, D)):
            return VerificationReport(False, i, "CutKeyframe")
        if path.avoid is not None and i < last and path.avoid in D:
            return VerificationReport(False, i, "AvoidViolated")
        if i == 0 and start is not None and D != start:
            return VerificationReport(False, 0, "WrongStart")
        if i > 0:
            prev = frames[i - 1]
            if prev == D or not prev.issubset(D):
                return VerificationReport(False, i, "NotMonotone")
            if not star_move_adjacent(sub, prev, D):
                return VerificationReport(False, i, "NotStarMove")
    if frames[-1] != bg.full:
        return VerificationReport(False, last, "WrongEnd")
    return VerificationReport(True)
