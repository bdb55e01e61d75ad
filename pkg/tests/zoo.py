"""Named test graphs."""
from ncstar import build_graph

EDGES = {
    "ARC1": [(0, 1)],
    "LOOP": [(0, 0)],
    "P3": [(0, 1), (1, 2)],
    "C4": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "TRIOD": [(0, 1), (0, 2), (0, 3)],
    "STAR4": [(0, 1), (0, 2), (0, 3), (0, 4)],
    "FIG8": [(0, 0), (0, 0)],
    "THETA": [(0, 1), (0, 1), (0, 1)],
    "K4": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    "DUMBBELL": [(0, 0), (0, 1), (1, 1)],
    "LOLLIPOP": [(0, 0), (0, 1)],
    "CRICKET": [(0, 1), (0, 1), (0, 2), (1, 3)],
}


def graph(name):
    return build_graph(EDGES[name])


def path_graph(n):
    return build_graph([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def random_region(rng, G, den=8):
    """A nonempty region with endpoints on the 1/den grid (not necessarily connected)."""
    from fractions import Fraction

    from ncstar import Region

    while True:
        verts = [v for v in G.vertices if rng.random() < 0.3]
        ivs = {}
        for e in range(len(G.edges)):
            if rng.random() < 0.5:
                a, b = sorted(rng.randint(0, den) for _ in range(2))
                ivs[e] = [(Fraction(a, den), Fraction(b, den))]
        R = Region.build(G, verts, ivs)
        if not R.is_empty():
            return R
