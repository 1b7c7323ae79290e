"""Deciding whether a connected matrix is synthesizable in n-1 gates.

A matrix with v(M) = 1 needs at least n-1 gates, all of which would
have to be link gates.  Such an all-link synthesis forces the influence
graph (arc i -> j iff M[j, i] = 1, i != j) to be acyclic, its transitive
reduction to be a spanning tree whose arcs are exactly the gates used,
and the gate order to follow pairwise constraints readable off M.  Each
stage either narrows the candidate synthesis or refutes linkability,
and the final replay check is decisive.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from . import connectivity, gf2
from .gf2 import BinMatrix, CnotGate, Synthesis


class LinkabilityError(ValueError):
    """Precondition failure: singular input or v(M) != 1."""


@dataclass(frozen=True)
class InfluenceGraph:
    """Directed graph on [n]; successors stored as bitmasks (0-indexed)."""

    n: int
    succ: tuple[int, ...]

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs as sorted 1-indexed (source, destination) pairs."""
        out = []
        for u in range(self.n):
            s = self.succ[u]
            v = 0
            while s:
                if s & 1:
                    out.append((u + 1, v + 1))
                s >>= 1
                v += 1
        return sorted(out)

    def arc_count(self) -> int:
        return sum(s.bit_count() for s in self.succ)


def influence_graph(m: BinMatrix) -> InfluenceGraph:
    """Arc (i, j) present iff M[j, i] = 1 and i != j."""
    n = m.n
    succ = [0] * n
    for j in range(n):
        for i in range(n):
            if i != j and (m.rows[j] >> i) & 1:
                succ[i] |= 1 << j
    return InfluenceGraph(n, tuple(succ))


def has_cycle(g: InfluenceGraph) -> bool:
    order = _topological_order(g)
    return order is None


def _topological_order(g: InfluenceGraph) -> list[int] | None:
    """Kahn's algorithm; None if the graph has a directed cycle."""
    indeg = [0] * g.n
    for u in range(g.n):
        s = g.succ[u]
        v = 0
        while s:
            if s & 1:
                indeg[v] += 1
            s >>= 1
            v += 1
    ready = [u for u in range(g.n) if indeg[u] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        s = g.succ[u]
        v = 0
        while s:
            if s & 1:
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
            s >>= 1
            v += 1
    return order if len(order) == g.n else None


def transitive_reduction(g: InfluenceGraph) -> InfluenceGraph:
    """Unique minimal reduction of a DAG: drop arc (u, v) iff some path
    of length >= 2 joins u to v.  Reachability via per-node bitsets."""
    order = _topological_order(g)
    if order is None:
        raise ValueError("transitive reduction requires an acyclic graph")
    reach = [0] * g.n  # strict descendants
    for u in reversed(order):
        r = 0
        s = g.succ[u]
        v = 0
        while s:
            if s & 1:
                r |= (1 << v) | reach[v]
            s >>= 1
            v += 1
        reach[u] = r
    reduced = [0] * g.n
    for u in range(g.n):
        s = g.succ[u]
        v = 0
        while s:
            if s & 1:
                via_other = 0
                t = g.succ[u] & ~(1 << v)
                w = 0
                while t:
                    if t & 1:
                        via_other |= reach[w]
                    t >>= 1
                    w += 1
                if not (via_other >> v) & 1:
                    reduced[u] |= 1 << v
            s >>= 1
            v += 1
    return InfluenceGraph(g.n, tuple(reduced))


class Refusal(Enum):
    HAS_CYCLE = "HasCycle"
    REDUCTION_NOT_SPANNING_TREE = "ReductionNotSpanningTree"
    ORDER_CONSTRAINTS_INCONSISTENT = "OrderConstraintsInconsistent"
    REPLAY_MISMATCH = "ReplayMismatch"


@dataclass(frozen=True)
class LinkabilityResult:
    linkable: bool
    witness: Synthesis | None = None
    reason: Refusal | None = None


def _is_undirected_spanning_tree(g: InfluenceGraph) -> bool:
    if g.arc_count() != g.n - 1:
        return False
    uf = connectivity.UnionFind(g.n)
    for u, v in g.arcs():
        uf.union(u - 1, v - 1)
    return len({uf.find(x) for x in range(g.n)}) == 1


def decide_linkable(m: BinMatrix) -> LinkabilityResult:
    """Decide s(M) <= n - 1 for invertible M with v(M) = 1.

    Returns a replay-verified witness of n - 1 link gates, or the first
    failing stage as the refusal reason.
    """
    gf2.inverse(m)  # raises SingularMatrixError for bad input
    n = m.n
    if connectivity.v_count(m) != 1:
        raise LinkabilityError(f"linkability requires v(M) = 1, got {connectivity.v_count(m)}")

    graph = influence_graph(m)
    if has_cycle(graph):
        return LinkabilityResult(False, reason=Refusal.HAS_CYCLE)

    reduced = transitive_reduction(graph)
    if not _is_undirected_spanning_tree(reduced):
        return LinkabilityResult(False, reason=Refusal.REDUCTION_NOT_SPANNING_TREE)

    arcs = reduced.arcs()
    index = {arc: k for k, arc in enumerate(arcs)}
    # For adjacent arcs (u,v), (v,w): gate (u,v) precedes (v,w) iff M[w,u]=1.
    after: list[set[int]] = [set() for _ in arcs]
    indeg = [0] * len(arcs)
    for u, v in arcs:
        for v2, w in arcs:
            if v2 != v:
                continue
            a, b = index[(u, v)], index[(v, w)]
            if m.get(w, u) == 1:
                first, second = a, b
            else:
                first, second = b, a
            if second not in after[first]:
                after[first].add(second)
                indeg[second] += 1

    ready = [k for k in range(len(arcs)) if indeg[k] == 0]
    heapq.heapify(ready)  # lexicographic tie-break keeps witnesses reproducible
    ordered: list[int] = []
    while ready:
        k = heapq.heappop(ready)
        ordered.append(k)
        for nxt in after[k]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(ready, nxt)
    if len(ordered) != len(arcs):
        return LinkabilityResult(False, reason=Refusal.ORDER_CONSTRAINTS_INCONSISTENT)

    witness = Synthesis(n, tuple(CnotGate(*arcs[k]) for k in ordered))
    if witness.replay() != m:
        return LinkabilityResult(False, reason=Refusal.REPLAY_MISMATCH)
    return LinkabilityResult(True, witness=witness)
