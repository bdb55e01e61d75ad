"""Discrete subcontinua: vertex + edge bitsets over a (subdivided) graph."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._util import bits, popcount
from .errors import GraphMismatch

__all__ = ["Subgraph", "BitGraph", "bitgraph"]


@dataclass(frozen=True, order=True)
class Subgraph:
    """Selected vertices and closed edges; ordered by ``(vertex_bits, edge_bits)``."""

    vertex_bits: int
    edge_bits: int = 0

    def vertices(self) -> list[int]:
        return list(bits(self.vertex_bits))

    def edges(self) -> list[int]:
        return list(bits(self.edge_bits))

    def __contains__(self, vertex: int) -> bool:
        return bool(self.vertex_bits >> vertex & 1)

    def __or__(self, other: "Subgraph") -> "Subgraph":
        return Subgraph(self.vertex_bits | other.vertex_bits, self.edge_bits | other.edge_bits)

    def __and__(self, other: "Subgraph") -> "Subgraph":
        return Subgraph(self.vertex_bits & other.vertex_bits, self.edge_bits & other.edge_bits)

    def issubset(self, other: "Subgraph") -> bool:
        return (self.vertex_bits & ~other.vertex_bits) == 0 and (self.edge_bits & ~other.edge_bits) == 0

    def is_empty(self) -> bool:
        return self.vertex_bits == 0 and self.edge_bits == 0

    def to_hex(self) -> dict:
        return {"vertices": format(self.vertex_bits, "x"), "edges": format(self.edge_bits, "x")}

    @classmethod
    def from_hex(cls, data: dict) -> "Subgraph":
        return cls(int(data["vertices"], 16), int(data.get("edges", "0"), 16))

    @classmethod
    def of(cls, vertices=(), edges=()) -> "Subgraph":
        vb = eb = 0
        for v in vertices:
            vb |= 1 << v
        for e in edges:
            eb |= 1 << e
        return cls(vb, eb)


class BitGraph:
    """Bitmask view of a :class:`~ncstar.graph.TopoGraph` for fast subgraph tests."""

    def __init__(self, G):
        self.graph = G
        self.n = G.n_vertices
        self.m = len(G.edges)
        self.all_vertices = (1 << self.n) - 1
        self.all_edges = (1 << self.m) - 1
        self.ends = [(1 << u) | (1 << v) for u, v in G.edges]
        self.incident = [0] * self.n
        self.neighbors = [0] * self.n
        for e, (u, v) in enumerate(G.edges):
            self.incident[u] |= 1 << e
            self.incident[v] |= 1 << e
            self.neighbors[u] |= 1 << v
            self.neighbors[v] |= 1 << u

    @property
    def full(self) -> Subgraph:
        return Subgraph(self.all_vertices, self.all_edges)

    def check(self, D: Subgraph) -> None:
        if D.vertex_bits & ~self.all_vertices or D.edge_bits & ~self.all_edges:
            raise GraphMismatch("subgraph uses ids outside the graph")

    def edge_ends_mask(self, edge_bits: int) -> int:
        out = 0
        for e in bits(edge_bits):
            out |= self.ends[e]
        return out

    def incident_mask(self, vertex_bits: int) -> int:
        out = 0
        for v in bits(vertex_bits):
            out |= self.incident[v]
        return out

    def is_valid(self, D: Subgraph) -> bool:
        """Nonempty, edges closed under endpoints, realization connected."""
        if D.vertex_bits == 0:
            return False
        if self.edge_ends_mask(D.edge_bits) & ~D.vertex_bits:
            return False
        return self._reach(D.vertex_bits & -D.vertex_bits, D.vertex_bits, D.edge_bits) == D.vertex_bits

    def _reach(self, seed: int, within: int, edge_bits: int) -> int:
        seen = seed
        frontier = seed
        while frontier:
            grow = 0
            for e in bits(self.incident_mask(frontier) & edge_bits):
                grow |= self.ends[e]
            grow &= within & ~seen
            seen |= grow
            frontier = grow
        return seen

    def complement_components(self, D: Subgraph) -> list[Subgraph]:
        """Components of ``G \\ D`` as (free vertices, open edges) bitsets."""
        free_v = self.all_vertices & ~D.vertex_bits
        free_e = self.all_edges & ~D.edge_bits
        out = []
        for e in bits(free_e):
            if not self.ends[e] & free_v:
                out.append(Subgraph(0, 1 << e))
        left = free_v
        while left:
            comp = self._reach(left & -left, free_v, free_e)
            out.append(Subgraph(comp, self.incident_mask(comp) & free_e))
            left &= ~comp
        return out

    def complement_connected(self, D: Subgraph, vertex_mask: int | None = None, edge_mask: int | None = None) -> bool:
        """Is ``U \\ D`` connected or empty, where ``U`` defaults to the whole graph."""
        vertex_mask = self.all_vertices if vertex_mask is None else vertex_mask
        edge_mask = self.all_edges if edge_mask is None else edge_mask
        free_v = vertex_mask & ~D.vertex_bits
        free_e = edge_mask & ~D.edge_bits
        for e in bits(free_e):
            if not self.ends[e] & free_v:
                if free_v or popcount(free_e) > 1:
                    return False
        if not free_v:
            return True
        return self._reach(free_v & -free_v, free_v, free_e) == free_v

    def is_noncut(self, D: Subgraph) -> bool:
        return self.is_valid(D) and self.complement_connected(D)


@lru_cache(maxsize=256)
def bitgraph(G) -> BitGraph:
    return BitGraph(G)
