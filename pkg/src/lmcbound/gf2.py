"""Bit-packed GF(2) matrix arithmetic and CNOT gate application.

Matrices are square, at most 32x32, and stored as one integer per row
(bit j of ``rows[i]`` holds entry (i, j), both 0-indexed).  Row addition,
the effect of a CNOT gate, is a single XOR of words.  Qubit labels are
1-indexed everywhere outside this module's storage, matching the usual
circuit convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_DIM = 32


class Gf2Error(ValueError):
    """Base error for GF(2) matrix operations."""


class DimensionError(Gf2Error):
    """Dimension out of range or mismatched between operands."""


class SingularMatrixError(Gf2Error):
    """Inverse requested for a non-invertible matrix."""


class GateError(Gf2Error):
    """Invalid CNOT gate (equal or out-of-range labels)."""


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise DimensionError(f"dimension must be in [1, {MAX_DIM}], got {n}")


@dataclass(frozen=True)
class CnotGate:
    """A CNOT gate adding the control row to the target row (1-indexed)."""

    control: int
    target: int

    def __post_init__(self) -> None:
        if self.control == self.target:
            raise GateError(f"control and target must differ, got {self.control}")
        if self.control < 1 or self.target < 1:
            raise GateError("qubit labels are 1-indexed and must be positive")

    def validate(self, n: int) -> None:
        if self.control > n or self.target > n:
            raise GateError(f"gate ({self.control},{self.target}) out of range for n={n}")


@dataclass(frozen=True)
class BinMatrix:
    """An n x n binary matrix with rows packed into integers."""

    n: int
    rows: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> "BinMatrix":
        _check_dim(n)
        return BinMatrix(n, tuple(1 << i for i in range(n)))

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], validate: bool = True) -> "BinMatrix":
        """Build from a list of 0/1 row lists; optionally require invertibility."""
        n = len(rows)
        _check_dim(n)
        packed = []
        for r in rows:
            if len(r) != n:
                raise DimensionError(f"expected {n} entries per row, got {len(r)}")
            word = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise Gf2Error(f"matrix entries must be 0 or 1, got {v!r}")
                word |= v << j
            packed.append(word)
        m = BinMatrix(n, tuple(packed))
        if validate and not is_invertible(m):
            raise SingularMatrixError("matrix is singular over GF(2)")
        return m

    def get(self, i: int, j: int) -> int:
        """Entry at 1-indexed position (i, j)."""
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.n)) for r in self.rows
        )


@dataclass(frozen=True)
class Synthesis:
    """An ordered CNOT gate sequence, applied left-to-right to the identity."""

    n: int
    gates: tuple[CnotGate, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        for g in self.gates:
            g.validate(self.n)

    def replay(self) -> BinMatrix:
        m = BinMatrix.identity(self.n)
        for g in self.gates:
            m = apply_cnot(m, g)
        return m

    def __len__(self) -> int:
        return len(self.gates)


def apply_cnot(m: BinMatrix, g: CnotGate) -> BinMatrix:
    """XOR the control row into the target row."""
    g.validate(m.n)
    rows = list(m.rows)
    rows[g.target - 1] ^= rows[g.control - 1]
    return BinMatrix(m.n, tuple(rows))


def multiply(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    out = []
    for ra in a.rows:
        acc = 0
        j = 0
        r = ra
        while r:
            if r & 1:
                acc ^= b.rows[j]
            r >>= 1
            j += 1
        out.append(acc)
    return BinMatrix(a.n, tuple(out))


def is_invertible(m: BinMatrix) -> bool:
    try:
        inverse(m)
    except SingularMatrixError:
        return False
    return True


def inverse(m: BinMatrix) -> BinMatrix:
    """Gauss-Jordan inverse; raises SingularMatrixError on singular input."""
    n = m.n
    rows = list(m.rows)
    aug = [1 << i for i in range(n)]
    for col in range(n):
        pivot = -1
        for i in range(col, n):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot == -1:
            raise SingularMatrixError("matrix is singular over GF(2)")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for i in range(n):
            if i != col and (rows[i] >> col) & 1:
                rows[i] ^= rows[col]
                aug[i] ^= aug[col]
    return BinMatrix(n, tuple(aug))


def transpose(m: BinMatrix) -> BinMatrix:
    n = m.n
    out = [0] * n
    for i, r in enumerate(m.rows):
        for j in range(n):
            if (r >> j) & 1:
                out[j] |= 1 << i
    return BinMatrix(n, tuple(out))


def xor(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return BinMatrix(a.n, tuple(ra ^ rb for ra, rb in zip(a.rows, b.rows)))


def bit_and(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return BinMatrix(a.n, tuple(ra & rb for ra, rb in zip(a.rows, b.rows)))


def diag_zero_count(m: BinMatrix) -> int:
    return sum(1 for i, r in enumerate(m.rows) if not (r >> i) & 1)


def encode(m: BinMatrix) -> int:
    """Row-major integer key: row i occupies bits [i*n, (i+1)*n)."""
    key = 0
    for i, r in enumerate(m.rows):
        key |= r << (i * m.n)
    return key


def decode(key: int, n: int) -> BinMatrix:
    _check_dim(n)
    mask = (1 << n) - 1
    return BinMatrix(n, tuple((key >> (i * n)) & mask for i in range(n)))
