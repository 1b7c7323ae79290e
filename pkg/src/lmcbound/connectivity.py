"""Connectivity invariants of a binary matrix.

Two graphs drive the gate-count bounds: the vertex graph on qubits,
joining i and j whenever an off-diagonal one appears at (i, j) or (j, i),
and the bipartite row/column graph joining R_i to C_j whenever entry
(i, j) is one.  Only their component partitions are ever needed, so the
graphs are never materialized; unions run straight off the matrix bits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BinMatrix


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # Root at the smaller index so representatives are canonical.
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class ComponentPartition:
    """Partition of 0-indexed elements; representative = minimum member."""

    element_count: int
    representatives: tuple[int, ...]
    component_count: int

    @staticmethod
    def from_union_find(uf: UnionFind) -> "ComponentPartition":
        reps = tuple(uf.find(x) for x in range(len(uf.parent)))
        return ComponentPartition(len(reps), reps, len(set(reps)))

    def groups(self) -> list[list[int]]:
        """Components as sorted lists of members, ordered by representative."""
        by_rep: dict[int, list[int]] = {}
        for x, r in enumerate(self.representatives):
            by_rep.setdefault(r, []).append(x)
        return [by_rep[r] for r in sorted(by_rep)]

    def same_component(self, x: int, y: int) -> bool:
        return self.representatives[x] == self.representatives[y]


def vertex_components(m: BinMatrix) -> ComponentPartition:
    """Partition of [n] under the vertex-connectivity graph."""
    uf = UnionFind(m.n)
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if (m.rows[i] >> j) & 1 or (m.rows[j] >> i) & 1:
                uf.union(i, j)
    return ComponentPartition.from_union_find(uf)


def edge_components(m: BinMatrix) -> ComponentPartition:
    """Partition of rows 0..n-1 and columns n..2n-1 under the bipartite graph."""
    n = m.n
    uf = UnionFind(2 * n)
    for i in range(n):
        r = m.rows[i]
        j = 0
        while r:
            if r & 1:
                uf.union(i, n + j)
            r >>= 1
            j += 1
    return ComponentPartition.from_union_find(uf)


def v_count(m: BinMatrix) -> int:
    return vertex_components(m).component_count


def e_count(m: BinMatrix) -> int:
    return edge_components(m).component_count
