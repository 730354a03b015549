"""
Disjoint-set forest used by the cluster and hole sweeps.
"""


class UnionFind:
    """Union by size with path halving over the elements ``0 .. n - 1``."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, element: int) -> int:
        parent = self.parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def union(self, first: int, second: int) -> int:
        """Merge the sets of ``first`` and ``second``.

        Returns the surviving root, which is the root of the larger set (the
        first one on ties). Uniting an element with its own set returns its
        root unchanged.
        """
        a = self.find(first)
        b = self.find(second)
        if a == b:
            return a
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.components -= 1
        return a

    def connected(self, first: int, second: int) -> bool:
        return self.find(first) == self.find(second)
