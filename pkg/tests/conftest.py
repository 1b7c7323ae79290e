"""Shared helpers and reference data for the test suite."""

from __future__ import annotations

import random

from lmcbound import gf2


def mat(*rows: str) -> gf2.BinMatrix:
    """Build a matrix from 0/1 row strings, no invertibility check."""
    n = len(rows)
    packed = []
    for r in rows:
        assert len(r) == n
        packed.append(sum(1 << j for j, ch in enumerate(r) if ch == "1"))
    return gf2.BinMatrix(n, tuple(packed))


def random_invertible(rng: random.Random, n: int) -> gf2.BinMatrix:
    while True:
        m = gf2.BinMatrix(n, tuple(rng.randrange(1, 1 << n) for _ in range(n)))
        if gf2.is_invertible(m):
            return m


def random_synthesis(rng: random.Random, n: int, length: int) -> gf2.Synthesis:
    gates = []
    for _ in range(length):
        c, t = rng.sample(range(1, n + 1), 2)
        gates.append(gf2.CnotGate(c, t))
    return gf2.Synthesis(n, tuple(gates))


# A 4x4 matrix whose influence-graph reduction replays to the wrong
# matrix, so it is refused as not linkable.
NOT_LINKABLE_4 = mat("1011", "1110", "0010", "0011")

# A 5x5 matrix with two vertex components and four edge components.
TWO_BY_FOUR_5 = mat("00100", "01010", "10000", "00001", "01000")

# A 5x5 matrix with M' = 0: thirteen rivers whose parities all cancel,
# so the middle bound is vacuous.
VANISHING_MPRIME_5 = mat("10011", "01101", "01110", "10110", "11001")

VANISHING_MPRIME_RIVERS = [
    "12345", "12435", "13245", "15342", "15432", "42315", "43215",
    "45231", "45312", "52341", "52431", "53241", "53412",
]

# The 3-cycle permutation matrix 1 -> 2 -> 3 -> 1 and a minimal
# six-gate synthesis of it.
CYCLE_3 = mat("010", "001", "100")

CYCLE_3_GATES = [(1, 2), (1, 3), (2, 1), (1, 2), (3, 2), (2, 3)]
