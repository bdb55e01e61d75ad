"""Exact closed subsets of a graph realization.

A :class:`Region` is a set of vertices plus, per edge, finitely many closed
rational intervals.  This module decides connectedness of a region and of its
complement (the non-cut test) and computes exact Hausdorff distances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ._util import UnionFind, bits
from .errors import EmptyRegion, NonCanonicalRegion, SubgraphGraphMismatch
from .graph import AtVertex, EdgeMap, GraphPoint, OnEdge, TopoGraph, check_point
from .subgraph import Subgraph

__all__ = [
    "Region",
    "ComplementReport",
    "region_connected",
    "complement_components",
    "complement_component_of",
    "is_noncut",
    "distance_to_region",
    "hausdorff_distance",
    "region_from_subgraph",
    "subgraph_from_region",
]

ZERO, ONE = Fraction(0), Fraction(1)

Interval = tuple[Fraction, Fraction]


def _merge(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    out: list[list[Fraction]] = []
    for a, b in sorted((Fraction(a), Fraction(b)) for a, b in intervals):
        if a > b or a < 0 or b > 1:
            raise NonCanonicalRegion(f"bad interval [{a}, {b}]")
        if out and a <= out[-1][1]:
            out[-1][1] = max(out[-1][1], b)
        else:
            out.append([a, b])
    return tuple((a, b) for a, b in out)


@dataclass(frozen=True)
class Region:
    """Closed subset of a realization, in canonical form.

    ``intervals`` is a sorted tuple of ``(edge, ((a, b), ...))`` pairs holding
    only edges with at least one interval.  Canonical means: intervals sorted,
    pairwise disjoint and not touching; no degenerate interval sits at an
    edge end (that point is the vertex itself); an interval reaching an edge
    end requires that end's vertex in ``vertices``.  Use :meth:`build` to get
    a canonical region from arbitrary data.
    """

    vertices: frozenset[int]
    intervals: tuple[tuple[int, tuple[Interval, ...]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        intervals = tuple(
            (e, tuple((Fraction(a), Fraction(b)) for a, b in ivs)) for e, ivs in self.intervals
        )
        object.__setattr__(self, "intervals", intervals)
        last = -1
        for e, ivs in intervals:
            if e <= last or not ivs:
                raise NonCanonicalRegion("edges must be sorted, distinct and nonempty")
            last = e
            if _merge(ivs) != ivs:
                raise NonCanonicalRegion(f"intervals on edge {e} are not merged")
            for a, b in ivs:
                if a == b and a in (ZERO, ONE):
                    raise NonCanonicalRegion(f"degenerate interval at an end of edge {e}")

    @classmethod
    def build(cls, G: TopoGraph, vertices=(), intervals: Mapping[int, Iterable] | None = None) -> "Region":
        verts = set(vertices)
        out = []
        for e in sorted(intervals or {}):
            if not 0 <= e < len(G.edges):
                raise NonCanonicalRegion(f"edge {e} not in graph")
            u, v = G.edges[e]
            merged = _merge(intervals[e])
            kept = []
            for a, b in merged:
                if a == 0:
                    verts.add(u)
                if b == 1:
                    verts.add(v)
                if a == b and a in (ZERO, ONE):
                    continue
                kept.append((a, b))
            if kept:
                out.append((e, tuple(kept)))
        return cls(frozenset(verts), tuple(out))

    @classmethod
    def whole(cls, G: TopoGraph) -> "Region":
        return cls.build(G, G.vertices, {e: [(0, 1)] for e in range(len(G.edges))})

    @classmethod
    def point(cls, G: TopoGraph, x: GraphPoint) -> "Region":
        check_point(G, x)
        if isinstance(x, AtVertex):
            return cls(frozenset([x.vertex]))
        return cls(frozenset(), ((x.edge, ((x.position, x.position),)),))

    def on(self, e: int) -> tuple[Interval, ...]:
        for f, ivs in self.intervals:
            if f == e:
                return ivs
        return ()

    def union(self, G: TopoGraph, other: "Region") -> "Region":
        ivs: dict[int, list] = {}
        for region in (self, other):
            for e, xs in region.intervals:
                ivs.setdefault(e, []).extend(xs)
        return Region.build(G, self.vertices | other.vertices, ivs)

    def is_empty(self) -> bool:
        return not self.vertices and not self.intervals


def _check(G: TopoGraph, R: Region) -> None:
    if R.is_empty():
        raise EmptyRegion("region is empty")
    for v in R.vertices:
        if not 0 <= v < G.n_vertices:
            raise NonCanonicalRegion(f"vertex {v} not in graph")
    for e, ivs in R.intervals:
        if not 0 <= e < len(G.edges):
            raise NonCanonicalRegion(f"edge {e} not in graph")
        u, v = G.edges[e]
        if ivs[0][0] == 0 and u not in R.vertices:
            raise NonCanonicalRegion(f"edge {e} reaches vertex {u} which is not in the region")
        if ivs[-1][1] == 1 and v not in R.vertices:
            raise NonCanonicalRegion(f"edge {e} reaches vertex {v} which is not in the region")


def region_connected(G: TopoGraph, R: Region) -> bool:
    _check(G, R)
    nodes: dict = {}

    def node(key):
        return nodes.setdefault(key, len(nodes))

    pairs = []
    for v in sorted(R.vertices):
        node(("v", v))
    for e, ivs in R.intervals:
        u, v = G.edges[e]
        for i, (a, b) in enumerate(ivs):
            me = node(("i", e, i))
            if a == 0:
                pairs.append((me, node(("v", u))))
            if b == 1:
                pairs.append((me, node(("v", v))))
    uf = UnionFind(len(nodes))
    for x, y in pairs:
        uf.union(x, y)
    return len(set(uf.labels())) == 1


@dataclass(frozen=True)
class ComplementReport:
    component_count: int
    representatives: tuple[GraphPoint, ...]


def _complement_pieces(G: TopoGraph, R: Region):
    """Pieces of ``G \\ R`` (free vertices and open gaps) with component labels."""
    pieces: list[tuple] = []
    index: dict = {}
    pairs = []
    for v in G.vertices:
        if v not in R.vertices:
            index[("v", v)] = len(pieces)
            pieces.append(("v", v))
    for e, (u, v) in enumerate(G.edges):
        ivs = R.on(e)
        cuts = [ZERO, *[x for ab in ivs for x in ab], ONE]
        for j in range(0, len(cuts), 2):
            lo, hi = cuts[j], cuts[j + 1]
            if lo == hi:
                continue
            me = len(pieces)
            pieces.append(("g", e, lo, hi))
            if lo == 0 and u not in R.vertices:
                pairs.append((me, index[("v", u)]))
            if hi == 1 and v not in R.vertices:
                pairs.append((me, index[("v", v)]))
    uf = UnionFind(len(pieces))
    for x, y in pairs:
        uf.union(x, y)
    return pieces, uf.labels()


def _piece_point(piece) -> GraphPoint:
    if piece[0] == "v":
        return AtVertex(piece[1])
    _, e, lo, hi = piece
    return OnEdge(e, (lo + hi) / 2)


def complement_components(G: TopoGraph, R: Region) -> ComplementReport:
    _check(G, R)
    pieces, labels = _complement_pieces(G, R)
    reps = {}
    for piece, label in zip(pieces, labels):
        reps.setdefault(label, _piece_point(piece))
    return ComplementReport(len(reps), tuple(reps[k] for k in sorted(reps)))


def complement_component_of(G: TopoGraph, R: Region, x: GraphPoint) -> int | None:
    """Index (in ``complement_components`` order) of the component holding ``x``.

    Returns ``None`` when ``x`` lies in ``R``.
    """
    _check(G, R)
    check_point(G, x)
    pieces, labels = _complement_pieces(G, R)
    order = sorted(set(labels))
    for piece, label in zip(pieces, labels):
        if piece[0] == "v":
            hit = isinstance(x, AtVertex) and x.vertex == piece[1]
        else:
            _, e, lo, hi = piece
            hit = isinstance(x, OnEdge) and x.edge == e and lo < x.position < hi
        if hit:
            return order.index(label)
    return None


def is_noncut(G: TopoGraph, R: Region) -> bool:
    return region_connected(G, R) and complement_components(G, R).component_count <= 1


def _vertex_gaps(G: TopoGraph, R: Region) -> list[Fraction]:
    """Distance from every vertex to ``R``."""
    seeds: dict[int, Fraction] = {v: ZERO for v in R.vertices}
    for e, ivs in R.intervals:
        u, v = G.edges[e]
        seeds[u] = min(seeds.get(u, ivs[0][0]), ivs[0][0])
        seeds[v] = min(seeds.get(v, 1 - ivs[-1][1]), 1 - ivs[-1][1])
    D = G.distances
    return [min(D[w][x] + s for x, s in seeds.items()) for w in G.vertices]


def _dist_on_edge(t: Fraction, ivs, via_u, via_v) -> Fraction:
    # via_u / via_v are (slope, intercept) of the routes through the edge ends
    best = min(via_u[0] * t + via_u[1], via_v[0] * t + via_v[1])
    for a, b in ivs:
        best = min(best, max(a - t, ZERO, t - b))
    return best


def distance_to_region(G: TopoGraph, x: GraphPoint, R: Region) -> Fraction:
    _check(G, R)
    check_point(G, x)
    gaps = _vertex_gaps(G, R)
    if isinstance(x, AtVertex):
        return Fraction(gaps[x.vertex])
    u, v = G.edges[x.edge]
    return _dist_on_edge(x.position, R.on(x.edge), (1, gaps[u]), (-1, 1 + gaps[v]))


def _directed(G: TopoGraph, R1: Region, R2: Region) -> Fraction:
    gaps = _vertex_gaps(G, R2)
    best = max((Fraction(gaps[v]) for v in R1.vertices), default=ZERO)
    for e, ivs1 in R1.intervals:
        u, v = G.edges[e]
        ivs2, via_u, via_v = R2.on(e), (1, gaps[u]), (-1, 1 + gaps[v])
        lines = [via_u, via_v, (0, ZERO)]
        kinks = []
        for a, b in ivs2:
            lines += [(-1, a), (1, -b)]
            kinks += [a, b]
        crossings = [
            Fraction(c2 - c1, s1 - s2)
            for i, (s1, c1) in enumerate(lines)
            for s2, c2 in lines[i + 1:]
            if s1 != s2
        ]
        for lo, hi in ivs1:
            for t in (lo, hi, *kinks, *crossings):
                if lo <= t <= hi:
                    best = max(best, _dist_on_edge(t, ivs2, via_u, via_v))
    return best


def hausdorff_distance(G: TopoGraph, R1: Region, R2: Region) -> Fraction:
    """Exact Hausdorff distance under the path metric.

    Distance to a region is piecewise linear along every edge with slopes in
    {-1, 0, 1}; its maximum over an interval is attained at an interval end,
    a kink, or a crossing of two of its linear pieces, all rational.
    """
    _check(G, R1)
    _check(G, R2)
    return max(_directed(G, R1, R2), _directed(G, R2, R1))


def region_from_subgraph(G: TopoGraph, M: EdgeMap, D: Subgraph) -> Region:
    """Realize a subgraph of the subdivided graph as a region of ``G``."""
    if M.n_original != G.n_vertices or len(M.chains) != len(G.edges):
        raise SubgraphGraphMismatch("edge map does not belong to this graph")
    n_sub_v = G.n_vertices + len(G.edges) * (M.k - 1)
    n_sub_e = len(G.edges) * M.k
    if D.vertex_bits >> n_sub_v or D.edge_bits >> n_sub_e:
        raise SubgraphGraphMismatch("subgraph uses ids outside the subdivided graph")
    step = M.length
    vertices = []
    ivs: dict[int, list] = {}
    for sv in bits(D.vertex_bits):
        x = M.point_of(sv)
        if isinstance(x, AtVertex):
            vertices.append(x.vertex)
        else:
            ivs.setdefault(x.edge, []).append((x.position, x.position))
    for se in bits(D.edge_bits):
        e, j = M.locate_edge(se)
        ivs.setdefault(e, []).append((j * step, (j + 1) * step))
    return Region.build(G, vertices, ivs)


def subgraph_from_region(G: TopoGraph, M: EdgeMap, R: Region) -> Subgraph:
    """Inverse of :func:`region_from_subgraph` for regions on the ``1/k`` grid."""
    _check(G, R)
    k = M.k
    vbits = 0
    ebits = 0
    for v in R.vertices:
        vbits |= 1 << v
    for e, xs in R.intervals:
        chain = M.chains[e]
        for a, b in xs:
            lo, hi = a * k, b * k
            if lo.denominator != 1 or hi.denominator != 1:
                raise SubgraphGraphMismatch(f"interval [{a}, {b}] on edge {e} is off the 1/{k} grid")
            for j in range(int(lo), int(hi) + 1):
                vbits |= 1 << chain.vertices[j]
            for j in range(int(lo), int(hi)):
                ebits |= 1 << chain.edges[j]
    return Subgraph(vbits, ebits)
