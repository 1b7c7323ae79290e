"""River-set algebra and the c_perfect middle-gate bound.

A river of M is a permutation sigma with M[i, sigma(i)] = 1 for all i,
i.e. a generalized diagonal of ones.  Enumerating rivers is factorial
and exists only as a test oracle; the production path computes
M' = (M AND inv(M)^T) XOR I, whose entries carry the parity of rivers
through each cell, and derives the component bound
c_perfect = (n + 2*Emp M' + Dup M') / 3 from the row structure of M'.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable

from . import gf2
from .gf2 import BinMatrix

ORACLE_MAX_DIM = 8


@dataclass(frozen=True)
class RiverSet:
    """All rivers of a matrix, each as a 0-indexed image tuple."""

    n: int
    permutations: frozenset[tuple[int, ...]]

    def one_line_strings(self) -> list[str]:
        """1-indexed one-line notation, sorted lexicographically."""
        return sorted("".join(str(x + 1) for x in p) for p in self.permutations)


def enumerate_rivers(m: BinMatrix) -> RiverSet:
    """Brute-force river enumeration; capped to small n, test oracle only."""
    n = m.n
    if n > ORACLE_MAX_DIM:
        raise gf2.DimensionError(
            f"river enumeration is factorial; capped at n <= {ORACLE_MAX_DIM}"
        )
    found: list[tuple[int, ...]] = []
    image = [0] * n

    def extend(i: int, used: int) -> None:
        if i == n:
            found.append(tuple(image))
            return
        avail = m.rows[i] & ~used
        while avail:
            low = avail & -avail
            j = low.bit_length() - 1
            image[i] = j
            extend(i + 1, used | low)
            avail ^= low
    extend(0, 0)
    return RiverSet(n, frozenset(found))


def permutation_matrix(image: Iterable[int], n: int) -> BinMatrix:
    """P_sigma with a one at (i, sigma(i)), sigma given as 0-indexed images."""
    rows = [0] * n
    for i, j in enumerate(image):
        rows[i] = 1 << j
    return BinMatrix(n, tuple(rows))


def mprime(m: BinMatrix) -> BinMatrix:
    """(M AND inv(M)^T) XOR I; rows may be zero, so the result can be singular."""
    inv_t = gf2.transpose(gf2.inverse(m))
    return gf2.xor(gf2.bit_and(m, inv_t), BinMatrix.identity(m.n))


def emp_dup(m: BinMatrix) -> tuple[int, int]:
    """Count all-zero rows and disjoint duplicate nonzero-row pairs.

    A value appearing k times contributes floor(k/2) pairs, the maximum
    matching within the group of equal rows.
    """
    emp = sum(1 for r in m.rows if r == 0)
    counts = Counter(r for r in m.rows if r != 0)
    dup = sum(k // 2 for k in counts.values())
    return emp, dup


@dataclass(frozen=True)
class CperfectReport:
    n: int
    mprime: BinMatrix
    emp: int
    dup: int
    cperfect_rational: Fraction
    cperfect: int
    middle_lower_bound: int


def cperfect(m: BinMatrix) -> CperfectReport:
    """Bound on the middle-gate component count and the derived gate bound.

    The rational value (n + 2*emp + dup)/3 need not be an integer;
    component counts are, so flooring it is sound and strictly stronger.
    Note n - floor(x) == ceil(n - x), so flooring here and taking the
    ceiling of the middle bound are the same rule.
    """
    mp = mprime(m)
    emp, dup = emp_dup(mp)
    rational = Fraction(m.n + 2 * emp + dup, 3)
    floored = floor(rational)
    return CperfectReport(
        n=m.n,
        mprime=mp,
        emp=emp,
        dup=dup,
        cperfect_rational=rational,
        cperfect=floored,
        middle_lower_bound=m.n - floored,
    )


def glitch_detect(m: BinMatrix) -> bool:
    """True iff M' vanishes for a non-identity matrix, voiding the bound."""
    if m == BinMatrix.identity(m.n):
        return False
    return all(r == 0 for r in mprime(m).rows)


def check_component_nullspace(m: BinMatrix, component: Iterable[int]) -> bool:
    """True iff the rows of M' indexed by the component (1-indexed) sum to zero."""
    labels = list(component)
    if not labels:
        raise ValueError("component must be nonempty")
    mp = mprime(m)
    acc = 0
    for i in labels:
        acc ^= mp.rows[i - 1]
    return acc == 0
