"""Small shared helpers."""

from __future__ import annotations


class DSU:
    """Disjoint-set union with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def canonical_cycle(seq):
    """Rotate a cyclic sequence so it starts at its minimum element."""
    seq = tuple(seq)
    if not seq:
        return seq
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def cyclic_equal(a, b) -> bool:
    """True if tuples a and b are equal up to rotation (same direction)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    double = b + b
    return any(double[i : i + len(a)] == a for i in range(len(b)))
