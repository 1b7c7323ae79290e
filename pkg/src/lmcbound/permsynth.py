"""Optimal CNOT syntheses of permutation circuits.

Five known constructions each synthesize an n-cycle in 3(n-1) gates,
differing in the order of link/middle/cut gates and in the spanning-tree
shapes those classes form.  A general permutation is synthesized cycle
by cycle in 3(n-k) gates, k the cycle count, and two disjoint cycles can
be joined by appending one swap (3 gates).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .gf2 import BinMatrix, CnotGate, Synthesis
from .rivers import permutation_matrix


@dataclass(frozen=True)
class Permutation:
    """Permutation of [n]; image[i-1] = sigma(i), 1-indexed values."""

    n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, self.n + 1)):
            raise ValueError(f"image {self.image} is not a bijection on [{self.n}]")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (fixed points included), each starting at its
        minimum element, ordered by that minimum."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self(start)
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self(x)
            out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def matrix(self) -> BinMatrix:
        return permutation_matrix([x - 1 for x in self.image], self.n)

    @staticmethod
    def from_cycles(cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for q in cycle:
                if not 1 <= q <= n:
                    raise ValueError(f"label {q} out of range for n={n}")
                if q in seen:
                    raise ValueError(f"label {q} appears in two cycles")
                seen.add(q)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                image[a - 1] = b
        return Permutation(n, tuple(image))


def parse_cycle_notation(text: str, n: int | None = None) -> Permutation:
    """Parse notation like "(1 3 5)(2 4)"; commas also accepted as separators."""
    body = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s*[, ]\s*\d+)*\s*\)\s*)*", body):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = [
        tuple(int(x) for x in re.split(r"[,\s]+", grp.strip()) if x)
        for grp in re.findall(r"\(([^()]*)\)", body)
    ]
    max_label = max((q for c in cycles for q in c), default=1)
    if n is None:
        n = max_label
    elif max_label > n:
        raise ValueError(f"cycle label {max_label} exceeds n={n}")
    return Permutation.from_cycles(cycles, n)


class ConstructionId(Enum):
    """The five n-cycle construction rows, named by the spanning-tree
    shapes of their link/middle/cut gate sets."""

    STAR_STAR_STAR = "row1"
    PATH_PATH_PATH = "row2"
    PATH_PATH_STAR = "row3"
    STAR_STAR_PATH = "row4"
    STAR_PATH_PATH = "row5"


def _canonical_gates(construction: ConstructionId, n: int) -> list[tuple[int, int]]:
    """Gate list over canonical labels 1..n, straight from the pseudocode."""
    gates: list[tuple[int, int]] = []
    if construction is ConstructionId.STAR_STAR_STAR:
        for i in range(2, n + 1):
            gates += [(1, i), (i, 1), (1, i)]
    elif construction is ConstructionId.PATH_PATH_PATH:
        for i in range(1, n):
            gates += [(n - i, n - i + 1), (n - i + 1, n - i), (n - i, n - i + 1)]
    elif construction is ConstructionId.PATH_PATH_STAR:
        gates += [(i, i + 1) for i in range(1, n)]
        gates += [(i + 1, i) for i in range(1, n)]
        gates += [(i, n) for i in range(1, n)]
    elif construction is ConstructionId.STAR_STAR_PATH:
        for i in range(1, n):
            gates += [(n - i, n), (n, n - i)]
        gates.append((1, n))
        gates += [(i + 1, i) for i in range(1, n - 1)]
    elif construction is ConstructionId.STAR_PATH_PATH:
        gates += [(1, i) for i in range(2, n + 1)]
        for i in range(1, n):
            gates += [(i + 1, i), (i, i + 1)]
    else:  # pragma: no cover
        raise ValueError(construction)
    return gates


@lru_cache(maxsize=None)
def _builds_successor_cycle(construction: ConstructionId, length: int) -> bool:
    """Whether the canonical block replays to the cycle 1 -> 2 -> ... -> 1
    (as opposed to its inverse).  Resolved by replay, not assumed."""
    s = Synthesis(length, tuple(CnotGate(c, t) for c, t in _canonical_gates(construction, length)))
    m = s.replay()
    forward = Permutation.from_cycles([tuple(range(1, length + 1))], length).matrix()
    if m == forward:
        return True
    backward = Permutation.from_cycles([tuple(range(length, 0, -1))], length).matrix()
    if m == backward:
        return False
    raise AssertionError(f"{construction} does not replay to a {length}-cycle")


def synth_cycle(
    cycle_qubits: Sequence[int],
    construction: ConstructionId = ConstructionId.STAR_STAR_STAR,
    n: int | None = None,
) -> Synthesis:
    """3(len-1)-gate synthesis of the cycle mapping each listed qubit to
    its successor, on n qubits (default: max label)."""
    length = len(cycle_qubits)
    if length < 2:
        raise ValueError("cycle must involve at least 2 qubits")
    if len(set(cycle_qubits)) != length:
        raise ValueError(f"duplicate qubits in cycle {tuple(cycle_qubits)}")
    if n is None:
        n = max(cycle_qubits)
    labels = list(cycle_qubits)
    if not _builds_successor_cycle(construction, length):
        # The block builds the inverse orientation; reversing the listed
        # order makes the replay come out as the successor cycle.
        labels = [labels[0]] + labels[:0:-1]
    gates = tuple(
        CnotGate(labels[c - 1], labels[t - 1])
        for c, t in _canonical_gates(construction, length)
    )
    return Synthesis(n, gates)


def synth_permutation(
    sigma: Permutation,
    construction: ConstructionId = ConstructionId.STAR_STAR_STAR,
) -> Synthesis:
    """3(n-k)-gate synthesis of P_sigma, cycle by cycle."""
    gates: list[CnotGate] = []
    for cycle in sigma.cycles():
        if len(cycle) >= 2:
            gates.extend(synth_cycle(cycle, construction, n=sigma.n).gates)
    return Synthesis(sigma.n, tuple(gates))


def join_cycles(s: Synthesis, i: int, j: int) -> Synthesis:
    """Append the swap of qubits i and j (3 gates).  If s synthesized
    P_sigma with i, j in disjoint cycles, the result synthesizes the
    permutation with those cycles merged."""
    swap = (CnotGate(i, j), CnotGate(j, i), CnotGate(i, j))
    return Synthesis(s.n, s.gates + swap)
