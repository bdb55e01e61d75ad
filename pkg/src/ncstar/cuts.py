"""Blocks, cut vertices and bridges of a multigraph; the tangle test."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import TopoGraph

__all__ = [
    "BRIDGE",
    "TANGLE",
    "BlockCutTree",
    "CutPointSummary",
    "block_cut_tree",
    "topological_cut_points",
    "is_tangle",
]

BRIDGE = "Bridge"
TANGLE = "Tangle"


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks partition the edges; ``tree`` lists (block index, cut vertex) links."""

    graph: TopoGraph
    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    cut_vertices: tuple[int, ...]
    tree: tuple[tuple[int, int], ...]

    def block_vertices(self, i: int) -> frozenset[int]:
        return frozenset(x for e in self.blocks[i] for x in self.graph.edges[e])

    def cuts_of(self, i: int) -> tuple[int, ...]:
        return tuple(c for b, c in self.tree if b == i)

    def blocks_at(self, v: int) -> tuple[int, ...]:
        return tuple(b for b, c in self.tree if c == v)

    @property
    def tangle_blocks(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k == TANGLE)

    def is_path(self) -> bool:
        """True when the (connected, acyclic) tree has no node of degree > 2."""
        if any(len(self.cuts_of(i)) > 2 for i in range(len(self.blocks))):
            return False
        return all(len(self.blocks_at(c)) <= 2 for c in self.cut_vertices)


def _nonloop_blocks(G: TopoGraph) -> list[list[int]]:
    # iterative Hopcroft-Tarjan on edge ids, so parallel edges are not mistaken
    # for the tree edge back to the parent
    adj: list[list[tuple[int, int]]] = [[] for _ in G.vertices]
    for e, (u, v) in enumerate(G.edges):
        if u != v:
            adj[u].append((v, e))
            adj[v].append((u, e))
    disc = [-1] * G.n_vertices
    low = [0] * G.n_vertices
    clock = 0
    edge_stack: list[int] = []
    blocks = []
    for root in G.vertices:
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        f = edge_stack.pop()
                        block.append(f)
                        if f == parent_edge:
                            break
                    blocks.append(sorted(block))
    return blocks


def block_cut_tree(G: TopoGraph) -> BlockCutTree:
    blocks = _nonloop_blocks(G)
    blocks += [[e] for e, (u, v) in enumerate(G.edges) if u == v]
    blocks.sort(key=min)
    kinds = []
    for b in blocks:
        u, v = G.edges[b[0]]
        kinds.append(BRIDGE if len(b) == 1 and u != v else TANGLE)
    owners: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for x in sorted({x for e in b for x in G.edges[e]}):
            owners.setdefault(x, []).append(i)
    cuts = tuple(sorted(v for v, bs in owners.items() if len(bs) >= 2))
    tree = tuple(sorted((i, c) for c in cuts for i in owners[c]))
    return BlockCutTree(G, tuple(tuple(b) for b in blocks), tuple(kinds), cuts, tree)


@dataclass(frozen=True)
class CutPointSummary:
    """Finite description of the cut points: cut vertices plus bridge interiors."""

    cut_vertices: frozenset[int]
    bridge_edges: tuple[int, ...]
    noncut_vertices: frozenset[int]

    def is_empty(self) -> bool:
        return not self.cut_vertices and not self.bridge_edges


def topological_cut_points(G: TopoGraph) -> CutPointSummary:
    bct = block_cut_tree(G)
    cuts = frozenset(bct.cut_vertices)
    bridges = tuple(b[0] for b, k in zip(bct.blocks, bct.kinds) if k == BRIDGE)
    return CutPointSummary(cuts, bridges, frozenset(G.vertices) - cuts)


def is_tangle(G: TopoGraph) -> bool:
    return topological_cut_points(G).is_empty()
