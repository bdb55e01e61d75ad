"""Brute-force reference implementations, written without the package's algorithms.

Everything here works on plain edge lists, sets and breadth-first search.
"""
from collections import deque
from fractions import Fraction
from itertools import combinations


def bfs(adj, sources):
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def grid(edges, n):
    """Each edge cut into ``n`` steps. Nodes: ("v", x) or ("e", edge, j) for 0<j<n."""
    adj = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for e, (u, v) in enumerate(edges):
        chain = [("v", u)] + [("e", e, j) for j in range(1, n)] + [("v", v)]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
    return adj


def grid_points(region, edges, n):
    pts = {("v", x) for x in region.vertices}
    for e, ivs in region.intervals:
        for j in range(1, n):
            t = Fraction(j, n)
            if any(a <= t <= b for a, b in ivs):
                pts.add(("e", e, j))
    return pts


def sampled_hausdorff(edges, r1, r2, n):
    """Hausdorff distance between the grid samples of two regions, in steps of 1/n."""
    adj = grid(edges, n)
    p1, p2 = grid_points(r1, edges, n), grid_points(r2, edges, n)
    d_to_2 = bfs(adj, list(p2))
    d_to_1 = bfs(adj, list(p1))
    worst = max(max(d_to_2[x] for x in p1), max(d_to_1[x] for x in p2))
    return Fraction(worst, n)


def point_components(edges, point, n=4):
    """Components of the grid minus one grid point (point given as a grid node)."""
    adj = grid(edges, n)
    left = set(adj) - {point}
    count = 0
    while left:
        seed = left.pop()
        reach = bfs({k: [y for y in v if y != point] for k, v in adj.items() if k != point}, [seed])
        left -= set(reach)
        count += 1
    return count


def connected_edge_set(edges, chosen):
    verts = {x for e in chosen for x in edges[e]}
    adj = {}
    for e in chosen:
        u, v = edges[e]
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    start = next(iter(verts))
    return set(bfs(adj, [start])) == verts


def connected_subgraphs(edges, n_vertices):
    """All (vertex set, edge set) pairs: singletons and connected edge sets."""
    out = {(frozenset([v]), frozenset()) for v in range(n_vertices)}
    for r in range(1, len(edges) + 1):
        for chosen in combinations(range(len(edges)), r):
            if connected_edge_set(edges, chosen):
                out.add((frozenset(x for e in chosen for x in edges[e]), frozenset(chosen)))
    return out


def complement_connected(edges, n_vertices, verts, chosen):
    """Complement of a subgraph: free vertices plus open free edges, glued at free ends."""
    nodes = [("v", x) for x in range(n_vertices) if x not in verts]
    nodes += [("e", e) for e in range(len(edges)) if e not in chosen]
    if not nodes:
        return True
    adj = {}
    for e in range(len(edges)):
        if e in chosen:
            continue
        for x in edges[e]:
            if x not in verts:
                adj.setdefault(("e", e), []).append(("v", x))
                adj.setdefault(("v", x), []).append(("e", e))
    return len(bfs(adj, [nodes[0]])) == len(nodes)


def star_move(edges, small, big):
    """Definition check: strict growth, difference inside the closed star of one vertex."""
    (sv, se), (bv, be) = small, big
    if not (sv <= bv and se <= be) or (sv, se) == (bv, be):
        return False
    dv, de = bv - sv, be - se
    if not de:
        return False
    for w in range(1 + max(x for e in edges for x in e)):
        if dv <= {w} and all(w in edges[e] for e in de):
            return True
    return False


def components_by_moves(edges, nodes):
    """Partition of ``nodes`` (list of (V, E)) under the symmetric star-move relation."""
    adj = {i: [] for i in range(len(nodes))}
    for a, b in combinations(range(len(nodes)), 2):
        if star_move(edges, nodes[a], nodes[b]) or star_move(edges, nodes[b], nodes[a]):
            adj[a].append(b)
            adj[b].append(a)
    seen, parts = set(), []
    for i in range(len(nodes)):
        if i not in seen:
            comp = set(bfs(adj, [i]))
            seen |= comp
            parts.append(frozenset(nodes[j] for j in comp))
    return parts
