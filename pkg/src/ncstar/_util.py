class UnionFind:
    def __init__(self, size=0):
        self.parent = list(range(size))

    def add(self):
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i, j):
        i, j = self.find(i), self.find(j)
        if i != j:
            # keep the smaller index as root so labels are deterministic
            if j < i:
                i, j = j, i
            self.parent[j] = i

    def labels(self):
        return [self.find(i) for i in range(len(self.parent))]


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")
