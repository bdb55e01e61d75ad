"""Brute-force discrete model of the non-cut hyperspace.

Nodes are the connected subgraphs of a subdivided graph whose complement is
connected (or empty).  Two nodes are adjacent when one grows into the other
by a *star move*: everything added lies in the closed star of a single
vertex, so the realized regions are within Hausdorff distance ``1/k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._util import UnionFind, bits
from .errors import BudgetExceeded, InvalidCertificate
from .graph import EdgeMap, TopoGraph, smooth, subdivide
from .region import Region, complement_components, hausdorff_distance, is_noncut, region_connected, region_from_subgraph
from .subgraph import Subgraph, bitgraph

__all__ = [
    "EDGE_BUDGET",
    "HyperspaceGraph",
    "NoncompactnessCertificate",
    "star_move_adjacent",
    "enumerate_connected",
    "enumerate_ncstar",
    "hyperspace_components",
    "oracle_verdict",
    "noncompactness_certificate",
    "certificate_family",
]

EDGE_BUDGET = 24


def star_move_adjacent(G: TopoGraph, A: Subgraph, B: Subgraph) -> bool:
    """Strict containment with the difference inside the closed star of one vertex."""
    bg = bitgraph(G)
    bg.check(A)
    bg.check(B)
    if A == B:
        return False
    if A.issubset(B):
        small, big = A, B
    elif B.issubset(A):
        small, big = B, A
    else:
        return False
    new_v = big.vertex_bits & ~small.vertex_bits
    new_e = big.edge_bits & ~small.edge_bits
    if new_e == 0 or new_v & (new_v - 1):
        return False
    # the star center: the added vertex, else an endpoint shared by all added edges
    centers = new_v or bg.all_vertices
    reach = small.vertex_bits | new_v
    for e in bits(new_e):
        centers &= bg.ends[e]
        if bg.ends[e] & ~reach:
            return False
    return centers != 0


def _check_budget(G: TopoGraph) -> None:
    if len(G.edges) > EDGE_BUDGET:
        raise BudgetExceeded(f"{len(G.edges)} edges exceeds the budget of {EDGE_BUDGET}")


def enumerate_connected(G: TopoGraph) -> list[Subgraph]:
    """All connected subgraphs (single vertices and connected edge sets with their ends)."""
    _check_budget(G)
    bg = bitgraph(G)
    out = [Subgraph(1 << v) for v in G.vertices]

    def grow(edge_bits, vertex_bits, allowed, excluded):
        out.append(Subgraph(vertex_bits, edge_bits))
        ext = bg.incident_mask(vertex_bits) & allowed & ~edge_bits & ~excluded
        for e in bits(ext):
            grow(edge_bits | 1 << e, vertex_bits | bg.ends[e], allowed, excluded)
            excluded |= 1 << e

    for root in range(bg.m):
        allowed = bg.all_edges & ~((1 << (root + 1)) - 1)
        grow(1 << root, bg.ends[root], allowed, 0)
    out.sort()
    return out


def enumerate_ncstar(G: TopoGraph) -> list[Subgraph]:
    """Connected subgraphs with connected (or empty) complement, in canonical order."""
    bg = bitgraph(G)
    return [D for D in enumerate_connected(G) if bg.complement_connected(D)]


@dataclass(frozen=True)
class HyperspaceGraph:
    graph: TopoGraph
    nodes: tuple[Subgraph, ...]
    adjacency: tuple[tuple[int, int], ...]
    component_ids: tuple[int, ...]

    @property
    def n_components(self) -> int:
        return len(set(self.component_ids))

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(self.component_ids):
            groups.setdefault(c, []).append(i)
        return [groups[c] for c in sorted(groups)]

    def is_connected(self) -> bool:
        return self.n_components == 1


def _subsets(links):
    for r in range(1, len(links) + 1):
        for chosen in combinations(links, r):
            yield sum(1 << e for e in chosen)


def _upward_moves(bg, A: Subgraph):
    """Every subgraph reachable from ``A`` by one growing star move."""
    for w in bits(bg.all_vertices):
        wb = 1 << w
        links = [e for e in bits(bg.incident[w] & ~A.edge_bits) if bg.ends[e] & ~wb & ~A.vertex_bits == 0]
        grown = A.vertex_bits | wb
        for eb in _subsets(links):
            yield Subgraph(grown, A.edge_bits | eb)


def hyperspace_components(G: TopoGraph, nodes) -> HyperspaceGraph:
    nodes = tuple(nodes)
    bg = bitgraph(G)
    index = {D: i for i, D in enumerate(nodes)}
    uf = UnionFind(len(nodes))
    adjacency = []
    for i, A in enumerate(nodes):
        for B in _upward_moves(bg, A):
            j = index.get(B)
            if j is not None:
                adjacency.append((min(i, j), max(i, j)))
                uf.union(i, j)
    return HyperspaceGraph(G, nodes, tuple(sorted(set(adjacency))), tuple(uf.labels()))


def discretize(G: TopoGraph, k: int) -> tuple[TopoGraph, TopoGraph, EdgeMap]:
    """``(smooth(G), subdivide(smooth(G), k), edge map)``."""
    S = smooth(G)
    sub, M = subdivide(S, k)
    _check_budget(sub)
    return S, sub, M


def oracle_verdict(G: TopoGraph, k: int) -> bool:
    _, sub, _ = discretize(G, k)
    return hyperspace_components(sub, enumerate_ncstar(sub)).is_connected()


@dataclass(frozen=True)
class NoncompactnessCertificate:
    """A non-cut base that, pushed onto the pivot vertex, becomes a cut continuum.

    ``approach`` holds the subdivided edges joining the pivot to the base;
    ``limit`` is the realized region of base + approach edges + pivot, in
    the ids of the smoothed graph.
    """

    k: int
    base: Subgraph
    pivot: int
    approach: int
    limit: Region


def noncompactness_certificate(G: TopoGraph, k: int) -> NoncompactnessCertificate | None:
    S, sub, M = discretize(G, k)
    bg = bitgraph(sub)
    for A in enumerate_ncstar(sub):
        for v in bits(bg.all_vertices & ~A.vertex_bits):
            vb = 1 << v
            links = [e for e in bits(bg.incident[v]) if bg.ends[e] != vb and bg.ends[e] & ~vb & ~A.vertex_bits == 0]
            for approach in sorted(_subsets(links)):
                limit_sub = Subgraph(A.vertex_bits | vb, A.edge_bits | approach)
                comps = bg.complement_components(limit_sub)
                if len(comps) < 2:
                    continue
                if not all(C.edge_bits & bg.incident[v] for C in comps):
                    continue
                limit = region_from_subgraph(S, M, limit_sub)
                return NoncompactnessCertificate(k, A, v, approach, limit)
    return None


def certificate_family(G: TopoGraph, cert: NoncompactnessCertificate, n: int) -> list[Region]:
    """Regions ``R_1..R_n`` converging to the certificate's limit.

    ``R_m`` is the base extended along every approach edge to within
    ``2**-m / k`` of the pivot.  Each must be non-cut, at Hausdorff distance
    exactly ``2**-m / k`` from the limit, while the limit itself is cut.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    S, sub, M = discretize(G, cert.k)
    base = region_from_subgraph(S, M, cert.base)
    step = M.length
    if not is_noncut(S, base) or not region_connected(S, cert.limit):
        raise InvalidCertificate("base is not non-cut or limit is not connected")
    if complement_components(S, cert.limit).component_count < 2:
        raise InvalidCertificate("limit is not a cut continuum")
    regions = []
    for m in range(1, n + 1):
        gap = step / 2**m
        ivs: dict[int, list] = {}
        for se in bits(cert.approach):
            e, j = M.locate_edge(se)
            lo, hi = j * step, (j + 1) * step
            if M.chains[e].vertices[j + 1] == cert.pivot:
                ivs.setdefault(e, []).append((lo, hi - gap))
            else:
                ivs.setdefault(e, []).append((lo + gap, hi))
        R = base.union(S, Region.build(S, (), ivs))
        if not is_noncut(S, R):
            raise InvalidCertificate(f"R_{m} is not non-cut")
        if hausdorff_distance(S, R, cert.limit) != Fraction(gap):
            raise InvalidCertificate(f"R_{m} is not at distance {gap} from the limit")
        regions.append(R)
    return regions
