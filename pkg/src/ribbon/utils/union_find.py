"""
Disjoint-set forest used for state loop counting, label merging and
spanning-tree construction.
"""

from typing import Dict, Hashable, Iterable


class UnionFind:
    """Union by size with path halving. Elements are registered lazily."""

    def __init__(self, elements: Iterable[Hashable] = ()):
        self._parent: Dict[Hashable, Hashable] = {}
        self._size: Dict[Hashable, int] = {}
        self.count = 0
        for element in elements:
            self.add(element)

    def add(self, element: Hashable) -> None:
        if element not in self._parent:
            self._parent[element] = element
            self._size[element] = 1
            self.count += 1

    def find(self, element: Hashable) -> Hashable:
        self.add(element)
        parent = self._parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def union(self, a: Hashable, b: Hashable) -> bool:
        """Merge the sets of a and b; False when they were already joined"""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self._size[root_a] < self._size[root_b]:
            root_a, root_b = root_b, root_a
        self._parent[root_b] = root_a
        self._size[root_a] += self._size[root_b]
        self.count -= 1
        return True
