"""The combined link/middle/cut lower bound on CNOT gate count.

For an invertible M the bound is ell + max(m + c, z, z_inv) where
ell = n - v(M) bounds the link gates, c = e(M) - v(M) the cut gates,
m = n - c_perfect the middle gates, and z, z_inv count diagonal zeroes
of M and its inverse (a floor on the non-link gates).

c_perfect can be taken from M itself, from M^T, or combined.  Since
size is invariant under transpose, every choice is a sound lower bound;
"min" is the strongest and "max" the weakest.  The three are exposed as
the `middle_term` option because the bundled reference census tables
turn out to disagree on which one they used: the 5-qubit table
reproduces cell-for-cell only under "max" and the 4-qubit table only
under "row".  The default is pinned to "max", the term that matches the
5-qubit census.

Size is also invariant under inverse and permutation conjugation, so
maximizing the report over M, M^T, M^-1, M^-T is sound and strictly
stronger; `strengthened_bound` does exactly that and stays off the
default path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from . import connectivity, gf2, rivers
from .gf2 import BinMatrix

MIDDLE_TERMS = ("min", "row", "max")
DEFAULT_MIDDLE_TERM = "max"


@dataclass(frozen=True)
class LmcReport:
    n: int
    v: int
    e: int
    ell: int
    m: int
    c: int
    z: int
    z_inv: int
    cperfect: int
    cperfect_rational: Fraction
    middle_term: str
    bound: int

    def depth_lower_bound(self) -> int:
        return depth_lower_bound(self.bound, self.n)


def _select_cperfect(m: BinMatrix, middle_term: str) -> Fraction:
    if middle_term not in MIDDLE_TERMS:
        raise ValueError(f"middle_term must be one of {MIDDLE_TERMS}")
    cp_row = rivers.cperfect(m).cperfect_rational
    if middle_term == "row":
        return cp_row
    cp_col = rivers.cperfect(gf2.transpose(m)).cperfect_rational
    return min(cp_row, cp_col) if middle_term == "min" else max(cp_row, cp_col)


def lmc_bound(m: BinMatrix, middle_term: str = DEFAULT_MIDDLE_TERM) -> LmcReport:
    minv = gf2.inverse(m)
    n = m.n
    v = connectivity.v_count(m)
    e = connectivity.e_count(m)
    ell = n - v
    c = e - v
    cp = _select_cperfect(m, middle_term)
    mid = n - floor(cp)
    z = gf2.diag_zero_count(m)
    z_inv = gf2.diag_zero_count(minv)
    bound = ell + max(mid + c, z, z_inv)
    return LmcReport(
        n=n, v=v, e=e, ell=ell, m=mid, c=c, z=z, z_inv=z_inv,
        cperfect=floor(cp), cperfect_rational=cp, middle_term=middle_term,
        bound=bound,
    )


def strengthened_bound(m: BinMatrix) -> int:
    """Max of the bound over M, M^T, M^-1, M^-T with the strongest
    middle term; sound but may exceed the default per-matrix report
    (and so diverge from the reference census tables)."""
    return max(
        lmc_bound(form, middle_term="min").bound for form in equivalent_forms(m)
    )


def equivalent_forms(
    m: BinMatrix, conjugating_permutations: Sequence[Iterable[int]] = ()
) -> list[BinMatrix]:
    """Matrices of the same size: M, M^-1, M^T, M^-T, plus P^-1 M P for
    each supplied permutation (0-indexed image tuples)."""
    minv = gf2.inverse(m)
    forms = [m, minv, gf2.transpose(m), gf2.transpose(minv)]
    for image in conjugating_permutations:
        p = rivers.permutation_matrix(image, m.n)
        forms.append(gf2.multiply(gf2.multiply(gf2.inverse(p), m), p))
    return forms


def depth_lower_bound(size_lb: int, n: int) -> int:
    """ceil(size_lb / floor(n/2)): parallel layers hold at most floor(n/2) CNOTs."""
    if n < 2:
        raise gf2.DimensionError("depth bound requires n >= 2")
    if size_lb < 0:
        raise ValueError("size lower bound must be nonnegative")
    return ceil(size_lb / (n // 2))
