"""Finite graphs as topological multigraphs with unit-length edges.

A :class:`TopoGraph` stands for its geometric realization: every edge is a
copy of ``[0, 1]`` glued to its endpoints, loops and parallel edges allowed.
Points of the realization are :class:`AtVertex` or :class:`OnEdge` values;
edge positions are exact rationals measured from the edge's first endpoint.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Union

from ._util import UnionFind
from .errors import Disconnected, EmptyGraph, InvalidPoint, SubdivisionTooCoarse

__all__ = [
    "TopoGraph",
    "AtVertex",
    "OnEdge",
    "GraphPoint",
    "EdgeMap",
    "Chain",
    "build_graph",
    "smooth",
    "subdivide",
    "walk_chains",
    "point_distance",
    "components_at_point",
    "is_circle",
    "is_single_edge",
]


@dataclass(frozen=True)
class TopoGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise EmptyGraph("a graph needs at least one edge")
        for u, v in edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) uses an undeclared vertex")
        uf = UnionFind(self.n_vertices)
        for u, v in edges:
            uf.union(u, v)
        if len(set(uf.labels())) != 1:
            raise Disconnected("the realization is not connected")

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @cached_property
    def edge_ends(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident edge-ends ``(edge, side)``; a loop contributes two."""
        ends = [[] for _ in self.vertices]
        for e, (u, v) in enumerate(self.edges):
            ends[u].append((e, 0))
            ends[v].append((e, 1))
        return tuple(tuple(x) for x in ends)

    def degree(self, v: int) -> int:
        return len(self.edge_ends[v])

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs vertex distances (unit edges), Floyd-Warshall."""
        n = self.n_vertices
        inf = float("inf")
        d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
        for u, v in self.edges:
            if u != v:
                d[u][v] = d[v][u] = 1
        for m in range(n):
            dm = d[m]
            for i in range(n):
                dim = d[i][m]
                if dim == inf:
                    continue
                di = d[i]
                for j in range(n):
                    if dim + dm[j] < di[j]:
                        di[j] = dim + dm[j]
        return tuple(tuple(int(x) for x in row) for row in d)


@dataclass(frozen=True)
class AtVertex:
    vertex: int


@dataclass(frozen=True)
class OnEdge:
    edge: int
    position: Fraction

    def __post_init__(self):
        t = Fraction(self.position)
        if not 0 < t < 1:
            raise InvalidPoint(f"edge position {t} is not strictly between 0 and 1")
        object.__setattr__(self, "position", t)


GraphPoint = Union[AtVertex, OnEdge]


class Chain(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class EdgeMap:
    """How :func:`subdivide` replaced each original edge.

    ``chains[e]`` holds the vertex chain (first endpoint first, ``k + 1``
    entries) and the ``k`` subdivided edges of original edge ``e``.  Every
    subdivided edge has length ``1 / k`` in the original metric.
    """

    k: int
    n_original: int
    chains: tuple[Chain, ...]

    @property
    def length(self) -> Fraction:
        return Fraction(1, self.k)

    def locate_edge(self, sub_edge: int) -> tuple[int, int]:
        """Original edge and slot index ``j`` (covering ``[j/k, (j+1)/k]``)."""
        return divmod(sub_edge, self.k)

    def point_of(self, sub_vertex: int) -> GraphPoint:
        if sub_vertex < self.n_original:
            return AtVertex(sub_vertex)
        e, j = divmod(sub_vertex - self.n_original, self.k - 1)
        return OnEdge(e, Fraction(j + 1, self.k))


def build_graph(edge_list) -> TopoGraph:
    edge_list = [tuple(pair) for pair in edge_list]
    if not edge_list:
        raise EmptyGraph("a graph needs at least one edge")
    ids = sorted({x for pair in edge_list for x in pair})
    index = {x: i for i, x in enumerate(ids)}
    return TopoGraph(len(ids), tuple((index[u], index[v]) for u, v in edge_list))


def check_point(G: TopoGraph, x: GraphPoint) -> None:
    if isinstance(x, AtVertex):
        if not 0 <= x.vertex < G.n_vertices:
            raise InvalidPoint(f"vertex {x.vertex} not in graph")
    elif isinstance(x, OnEdge):
        if not 0 <= x.edge < len(G.edges):
            raise InvalidPoint(f"edge {x.edge} not in graph")
    else:
        raise InvalidPoint(f"not a graph point: {x!r}")


def walk_chains(G: TopoGraph, edges=None) -> tuple[tuple[int, ...], list[Chain]]:
    """Split an edge set into maximal chains through degree-2 vertices.

    Degrees are counted inside ``edges`` (all edges by default).  Returns the
    branch vertices (degree other than 2) and the chains between them.  When
    there is no branch vertex the edge set is a cycle, returned as a single
    chain that starts and ends at its lowest vertex.  Each chain is oriented
    so that its lowest-id edge is walked in its stored direction.
    """
    edges = sorted(range(len(G.edges)) if edges is None else edges)
    ends: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        u, v = G.edges[e]
        ends.setdefault(u, []).append((e, 0))
        ends.setdefault(v, []).append((e, 1))
    branch = tuple(sorted(v for v, xs in ends.items() if len(xs) != 2))
    stops = set(branch)
    used: set[int] = set()
    chains = []
    for start in branch or (min(ends),):
        for e, side in ends[start]:
            if e in used:
                continue
            vs, es = [start], []
            sides = []
            while True:
                used.add(e)
                es.append(e)
                sides.append(side)
                nxt = G.edges[e][1 - side]
                vs.append(nxt)
                if nxt in stops or nxt == start:
                    break
                arrived = (e, 1 - side)
                e, side = next(x for x in ends[nxt] if x != arrived)
            low = es.index(min(es))
            if sides[low] == 1:
                vs.reverse()
                es.reverse()
            chains.append(Chain(tuple(vs), tuple(es)))
    if len(used) != len(edges):
        # cycles that avoid every branch vertex (only in disconnected edge sets)
        rest = [e for e in edges if e not in used]
        sub_branch, sub_chains = walk_chains(G, rest)
        assert not sub_branch
        chains.extend(sub_chains)
    chains.sort(key=lambda c: min(c.edges))
    return branch, chains


def is_circle(G: TopoGraph) -> bool:
    return all(G.degree(v) == 2 for v in G.vertices)


def is_single_edge(G: TopoGraph) -> bool:
    s = smooth(G)
    return len(s.edges) == 1 and s.edges[0][0] != s.edges[0][1]


def smooth(G: TopoGraph) -> TopoGraph:
    """Suppress degree-2 vertices; a circle becomes the single-loop graph."""
    branch, chains = walk_chains(G)
    if not branch:
        return TopoGraph(1, ((0, 0),))
    index = {v: i for i, v in enumerate(branch)}
    return TopoGraph(len(branch), tuple((index[c.vertices[0]], index[c.vertices[-1]]) for c in chains))


def _subdivide(G: TopoGraph, k: int) -> tuple[TopoGraph, EdgeMap]:
    n = G.n_vertices
    edges = []
    chains = []
    for e, (u, v) in enumerate(G.edges):
        inner = [n + e * (k - 1) + j for j in range(k - 1)]
        vs = (u, *inner, v)
        es = []
        for j in range(k):
            es.append(len(edges))
            edges.append((vs[j], vs[j + 1]))
        chains.append(Chain(vs, tuple(es)))
    sub = TopoGraph(n + len(G.edges) * (k - 1), tuple(edges))
    return sub, EdgeMap(k, n, tuple(chains))


def subdivide(G: TopoGraph, k: int) -> tuple[TopoGraph, EdgeMap]:
    """Replace every edge by a chain of ``k`` edges of length ``1/k``.

    Original vertices keep their ids; the interior vertices of edge ``e`` are
    ``n + e*(k-1) + j``.  Subdivided edge ``e*k + j`` covers ``[j/k, (j+1)/k]``
    of edge ``e``.  The result has no loops; the only parallel edges are the
    two halves of a loop when ``k == 2``.
    """
    if k < 2:
        raise SubdivisionTooCoarse(f"k must be at least 2, got {k}")
    return _subdivide(G, k)


def _anchors(x: GraphPoint, G: TopoGraph):
    if isinstance(x, AtVertex):
        return [(x.vertex, Fraction(0))]
    u, v = G.edges[x.edge]
    return [(u, x.position), (v, 1 - x.position)]


def point_distance(G: TopoGraph, x: GraphPoint, y: GraphPoint) -> Fraction:
    """Length of a shortest path between two points of the realization."""
    check_point(G, x)
    check_point(G, y)
    D = G.distances
    best = min(dx + D[a][b] + dy for a, dx in _anchors(x, G) for b, dy in _anchors(y, G))
    if isinstance(x, OnEdge) and isinstance(y, OnEdge) and x.edge == y.edge:
        best = min(best, abs(x.position - y.position))
    return Fraction(best)


def components_at_point(G: TopoGraph, x: GraphPoint) -> int:
    """Number of components of the realization with ``x`` removed."""
    check_point(G, x)
    if isinstance(x, OnEdge):
        u, v = G.edges[x.edge]
        if u == v:
            return 1
        uf = UnionFind(G.n_vertices)
        for e, (a, b) in enumerate(G.edges):
            if e != x.edge:
                uf.union(a, b)
        return 1 if uf.find(u) == uf.find(v) else 2
    p = x.vertex
    uf = UnionFind(G.n_vertices)
    loops = 0
    for a, b in G.edges:
        if a == p and b == p:
            loops += 1
        elif p not in (a, b):
            uf.union(a, b)
    roots = {uf.find(w) for w in G.vertices if w != p}
    return len(roots) + loops
