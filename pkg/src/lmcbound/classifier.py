"""Link/middle/cut classification of CNOT gates.

A gate applied at state M producing N is a link gate if it merges
vertex components, a cut gate if it splits a row/column component, and
a middle gate if it changes the river set; the three are mutually
exclusive, so classification short-circuits cheapest-first and leaves
the expensive river test for last.

The river-set test never enumerates rivers: S(M) != S(N) for the gate
adding row c to row t exactly when a permutation exists whose support
lies in M's rows for every row except t, and in row c's support at
position t.  That is a bipartite perfect-matching question.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import connectivity, gf2
from .gf2 import BinMatrix, CnotGate, Synthesis


class GateClass(Enum):
    LINK = "L"
    MIDDLE = "M"
    CUT = "C"
    NEITHER = "N"


def _has_perfect_matching(row_masks: list[int], n: int) -> bool:
    """Perfect matching on rows vs columns, column sets given as bitmasks."""
    match_col = [-1] * n

    def augment(i: int, visited: list[bool]) -> bool:
        for j in range(n):
            if (row_masks[i] >> j) & 1 and not visited[j]:
                visited[j] = True
                if match_col[j] == -1 or augment(match_col[j], visited):
                    match_col[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return False
    return True


def is_middle_fast(m: BinMatrix, g: CnotGate) -> bool:
    """True iff the gate changes the river set, via matching existence.

    A river flips membership under CNOT(c, t) exactly when all rows
    except t carry it on M's support and row t sits on row c's support,
    so the flip-carrying river exists iff this modified support admits
    a perfect matching.
    """
    g.validate(m.n)
    c, t = g.control - 1, g.target - 1
    masks = list(m.rows)
    masks[t] = m.rows[c]
    return _has_perfect_matching(masks, m.n)


def classify_gate(m: BinMatrix, g: CnotGate) -> GateClass:
    n = gf2.apply_cnot(m, g)
    if connectivity.v_count(n) < connectivity.v_count(m):
        return GateClass.LINK
    if connectivity.e_count(n) > connectivity.e_count(m):
        return GateClass.CUT
    if is_middle_fast(m, g):
        return GateClass.MIDDLE
    return GateClass.NEITHER


@dataclass(frozen=True)
class ClassifiedSynthesis:
    synthesis: Synthesis
    classes: tuple[GateClass, ...]
    final_matrix: BinMatrix

    @property
    def pattern(self) -> str:
        return "".join(c.value for c in self.classes)

    def count(self, cls: GateClass) -> int:
        return sum(1 for c in self.classes if c is cls)

    @property
    def counts(self) -> dict[GateClass, int]:
        return {cls: self.count(cls) for cls in GateClass}


def classify_synthesis(s: Synthesis) -> ClassifiedSynthesis:
    """Classify each gate against the prefix state replayed from identity."""
    m = BinMatrix.identity(s.n)
    classes = []
    for g in s.gates:
        classes.append(classify_gate(m, g))
        m = gf2.apply_cnot(m, g)
    return ClassifiedSynthesis(s, tuple(classes), m)


@dataclass(frozen=True)
class GateGraph:
    """Undirected graph on the n qubits with one edge per gate of a class."""

    n: int
    edges: frozenset[frozenset[int]]

    @property
    def is_spanning_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        uf = connectivity.UnionFind(self.n)
        for edge in self.edges:
            a, b = sorted(edge)
            uf.union(a - 1, b - 1)
        return len({uf.find(x) for x in range(self.n)}) == 1

    @property
    def degrees(self) -> dict[int, int]:
        deg = {q: 0 for q in range(1, self.n + 1)}
        for edge in self.edges:
            for q in edge:
                deg[q] += 1
        return deg

    @property
    def is_star(self) -> bool:
        return self.is_spanning_tree and max(self.degrees.values()) == self.n - 1

    @property
    def is_path(self) -> bool:
        return self.is_spanning_tree and max(self.degrees.values()) <= 2


def gate_graph(cs: ClassifiedSynthesis, cls: GateClass) -> GateGraph:
    edges = frozenset(
        frozenset((g.control, g.target))
        for g, c in zip(cs.synthesis.gates, cs.classes)
        if c is cls
    )
    return GateGraph(cs.synthesis.n, edges)
