"""Every small connected multigraph, one per isomorphism class, with verdicts."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations

from .classify import FTClassification, classify, ncstar_compact
from .errors import BudgetExceeded
from .graph import TopoGraph, build_graph
from .hyperspace import NoncompactnessCertificate, noncompactness_certificate, oracle_verdict

__all__ = ["MAX_ATLAS_EDGES", "AtlasEntry", "canonical_form", "connected_multigraphs", "atlas_run"]

MAX_ATLAS_EDGES = 5

Edges = tuple[tuple[int, int], ...]


def canonical_form(edges) -> Edges:
    """Lexicographically least sorted edge list over all vertex relabelings."""
    edges = [tuple(e) for e in edges]
    n = 1 + max(x for e in edges for x in e)
    best = None
    for perm in permutations(range(n)):
        cand = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or cand < best:
            best = cand
    return best


def _grow(edges: Edges) -> set[Edges]:
    n = 1 + max(x for e in edges for x in e)
    out = set()
    for u in range(n):
        for v in range(u, n + 1):
            out.add(canonical_form(edges + ((u, v),)))
    return out


def connected_multigraphs(max_edges: int) -> list[Edges]:
    """Canonical edge lists of connected multigraphs with 1..max_edges edges.

    Any connected multigraph with two or more edges loses one edge (a leaf
    edge or an edge on a cycle) and stays connected, so growing each class by
    one edge reaches every class of the next size.
    """
    if max_edges > MAX_ATLAS_EDGES:
        raise BudgetExceeded(f"atlas is limited to {MAX_ATLAS_EDGES} edges")
    if max_edges < 1:
        return []
    layer = {((0, 0),), ((0, 1),)}
    found = set(layer)
    for _ in range(max_edges - 1):
        layer = set().union(*(_grow(g) for g in layer))
        found |= layer
    return sorted(found, key=lambda g: (len(g), g))


@dataclass(frozen=True)
class AtlasEntry:
    edges: Edges
    classification: FTClassification
    oracle: dict[int, bool]
    certificate: NoncompactnessCertificate | None
    compact: bool
    seconds: float = field(default=0.0, compare=False)

    @property
    def graph(self) -> TopoGraph:
        return build_graph(self.edges)

    @property
    def disagreements(self) -> list[str]:
        out = [f"oracle k={k}" for k, ok in sorted(self.oracle.items()) if ok != self.classification.in_ft]
        if (self.certificate is None) != self.compact:
            out.append("certificate")
        return out

    @property
    def disagreement(self) -> bool:
        return bool(self.disagreements)


def atlas_run(max_edges: int, ks=(2,)) -> list[AtlasEntry]:
    ks = sorted(set(ks))
    if not ks or ks[0] < 2:
        raise ValueError("subdivision values must be at least 2")
    entries = []
    for edges in connected_multigraphs(max_edges):
        start = time.perf_counter()
        G = build_graph(edges)
        oracle = {k: oracle_verdict(G, k) for k in ks}
        cert = noncompactness_certificate(G, ks[0])
        entries.append(
            AtlasEntry(edges, classify(G), oracle, cert, ncstar_compact(G), time.perf_counter() - start)
        )
    return entries
