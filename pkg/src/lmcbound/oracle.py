"""Exhaustive BFS census over GL(n, F2) for n <= 5.

Produces exact sizes for every invertible matrix, the bound-vs-size
confusion matrix, and the accuracy metrics.  Tables are dense byte
arrays indexed by the row-major key (32 MiB at n = 5) with 0xFF marking
non-invertible keys.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import lru_cache
from math import sqrt
from pathlib import Path

import numpy as np

from . import _kernels, bound, gf2
from .gf2 import BinMatrix, CnotGate, Synthesis

MAX_CENSUS_DIM = 5
SENTINEL = _kernels.UNREACHED
CACHE_MAGIC = b"LMC1"

GL_COUNTS = _kernels.GL_COUNTS


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class SizeTable:
    """Exact size s(M) per matrix encoding; SENTINEL = not invertible."""

    n: int
    sizes: np.ndarray
    reachable_count: int
    build_seconds: float

    def size_of(self, m: BinMatrix) -> int:
        if m.n != self.n:
            raise gf2.DimensionError(f"table is for n={self.n}, matrix has n={m.n}")
        s = int(self.sizes[gf2.encode(m)])
        if s == SENTINEL:
            raise gf2.SingularMatrixError("matrix is singular over GF(2)")
        return s

    @property
    def max_size(self) -> int:
        return int(self.sizes[self.sizes != SENTINEL].max())

    def histogram(self) -> list[int]:
        """Count of invertible matrices per exact size."""
        reached = self.sizes[self.sizes != SENTINEL]
        return np.bincount(reached, minlength=self.max_size + 1).tolist()


def bfs_sizes(n: int) -> SizeTable:
    if not 1 <= n <= MAX_CENSUS_DIM:
        raise CensusError(f"census supports 1 <= n <= {MAX_CENSUS_DIM}, got {n}")
    start = time.perf_counter()
    sizes, reached = _kernels.bfs_kernel(n, GL_COUNTS[n])
    elapsed = time.perf_counter() - start
    return SizeTable(n, sizes, int(reached), elapsed)


def _middle_code(middle_term: str) -> int:
    try:
        return bound.MIDDLE_TERMS.index(middle_term)
    except ValueError:
        raise CensusError(f"middle_term must be one of {bound.MIDDLE_TERMS}")


def bounds_table(
    table: SizeTable, middle_term: str = bound.DEFAULT_MIDDLE_TERM
) -> np.ndarray:
    """LMC bound per invertible key, aligned with the size table."""
    return _kernels.bounds_kernel(table.sizes, table.n, _middle_code(middle_term))


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[b][s] = number of matrices with bound b and exact size s."""

    n: int
    counts: tuple[tuple[int, ...], ...]
    middle_term: str
    build_seconds: float

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def dim(self) -> int:
        return len(self.counts)

    def cell(self, bound_value: int, size_value: int) -> int:
        return self.counts[bound_value][size_value]

    def column_normalized(self) -> list[list[float]]:
        """Per-size-column fractions, for the heatmap report."""
        col_sums = [sum(row[s] for row in self.counts) for s in range(self.dim)]
        return [
            [row[s] / col_sums[s] if col_sums[s] else 0.0 for s in range(self.dim)]
            for row in self.counts
        ]


def confusion(
    n: int,
    table: SizeTable | None = None,
    middle_term: str = bound.DEFAULT_MIDDLE_TERM,
) -> ConfusionMatrix:
    start = time.perf_counter()
    if table is None:
        table = bfs_sizes(n)
    bounds = bounds_table(table, middle_term)
    dim = 3 * (n - 1) + 1 if n > 1 else 1
    mask = table.sizes != SENTINEL
    joint = bounds[mask].astype(np.int64) * dim + table.sizes[mask].astype(np.int64)
    flat = np.bincount(joint, minlength=dim * dim)
    counts = tuple(
        tuple(int(x) for x in flat[b * dim : (b + 1) * dim]) for b in range(dim)
    )
    elapsed = time.perf_counter() - start + table.build_seconds
    return ConfusionMatrix(n, counts, middle_term, elapsed)


@dataclass(frozen=True)
class Metrics:
    """Accuracy of the bound against exact sizes over a census.

    delta_* are fractions of matrices with size - bound below the cutoff;
    sigma is the root-mean-square of the deviation, mad its mean (the
    deviation is never negative), pcc the Pearson correlation between
    bound and size, and r_squared = pcc**2.
    """

    n: int
    total: int
    delta0: float
    delta1: float
    delta2: float
    sigma: float
    mad: float
    pcc: float
    r_squared: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "delta0": self.delta0,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "sigma": self.sigma,
            "mad": self.mad,
            "pcc": self.pcc,
            "r_squared": self.r_squared,
            "definitions": {
                "delta": "size - bound",
                "sigma": "sqrt(mean(delta^2))",
                "mad": "mean(|delta|)",
                "pcc": "Pearson correlation of (bound, size)",
                "r_squared": "pcc^2",
            },
        }


def metrics(cm: ConfusionMatrix) -> Metrics:
    total = cm.total
    d_counts: dict[int, int] = {}
    sum_b = sum_s = sum_bb = sum_ss = sum_bs = 0
    for b, row in enumerate(cm.counts):
        for s, count in enumerate(row):
            if count == 0:
                continue
            d_counts[s - b] = d_counts.get(s - b, 0) + count
            sum_b += b * count
            sum_s += s * count
            sum_bb += b * b * count
            sum_ss += s * s * count
            sum_bs += b * s * count
    delta0 = sum(c for d, c in d_counts.items() if d <= 0) / total
    delta1 = sum(c for d, c in d_counts.items() if d <= 1) / total
    delta2 = sum(c for d, c in d_counts.items() if d <= 2) / total
    mad = sum(abs(d) * c for d, c in d_counts.items()) / total
    sigma = sqrt(sum(d * d * c for d, c in d_counts.items()) / total)
    mean_b, mean_s = sum_b / total, sum_s / total
    var_b = sum_bb / total - mean_b**2
    var_s = sum_ss / total - mean_s**2
    cov = sum_bs / total - mean_b * mean_s
    pcc = cov / sqrt(var_b * var_s) if var_b > 0 and var_s > 0 else 1.0
    return Metrics(
        n=cm.n, total=total, delta0=delta0, delta1=delta1, delta2=delta2,
        sigma=sigma, mad=mad, pcc=pcc, r_squared=pcc * pcc,
    )


def exact_size(m: BinMatrix, table: SizeTable) -> int:
    return table.size_of(m)


def witness_synthesis(m: BinMatrix, table: SizeTable) -> Synthesis:
    """A minimal synthesis, by greedy descent along size-decreasing
    neighbors, lexicographically first gate on ties."""
    s = table.size_of(m)
    gates: list[CnotGate] = []
    current = m
    size = s
    while size > 0:
        for c in range(1, m.n + 1):
            for t in range(1, m.n + 1):
                if c == t:
                    continue
                g = CnotGate(c, t)
                neighbor = gf2.apply_cnot(current, g)
                if int(table.sizes[gf2.encode(neighbor)]) == size - 1:
                    gates.append(g)
                    current = neighbor
                    size -= 1
                    break
            else:
                continue
            break
        else:  # pragma: no cover - contradicts BFS neighbor consistency
            raise AssertionError("no size-decreasing neighbor found")
    return Synthesis(m.n, tuple(reversed(gates)))


def save_cache(table: SizeTable, path: Path | str) -> None:
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(bytes([table.n]))
        fh.write(table.sizes.tobytes())


def load_cache(path: Path | str) -> SizeTable:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != CACHE_MAGIC:
            raise CensusError(f"bad cache magic {magic!r}")
        n = fh.read(1)[0]
        data = np.frombuffer(fh.read(), dtype=np.uint8)
    if n < 1 or n > MAX_CENSUS_DIM or data.shape[0] != 1 << (n * n):
        raise CensusError("cache file is corrupt")
    reached = int((data != SENTINEL).sum())
    if reached != GL_COUNTS[n]:
        raise CensusError("cache file is corrupt")
    return SizeTable(n, data, reached, 0.0)


@lru_cache(maxsize=None)
def get_size_table(n: int) -> SizeTable:
    """Process-wide memoized size table; kernels warmed up first."""
    _kernels.warmup()
    return bfs_sizes(n)


@lru_cache(maxsize=None)
def get_confusion(
    n: int, middle_term: str = bound.DEFAULT_MIDDLE_TERM
) -> ConfusionMatrix:
    return confusion(n, get_size_table(n), middle_term)


def write_census_reports(
    n: int,
    out_dir: Path | str,
    middle_term: str = bound.DEFAULT_MIDDLE_TERM,
    table: SizeTable | None = None,
) -> dict[str, Path]:
    """Write the four census artifacts; returns the paths keyed by kind."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if table is None:
        table = get_size_table(n)
        cm = get_confusion(n, middle_term)
    else:
        _kernels.warmup()
        cm = confusion(n, table, middle_term)
    met = metrics(cm)

    hist_path = out / f"sizes_n{n}.csv"
    hist = table.histogram()
    with open(hist_path, "w") as fh:
        fh.write("size,count\n")
        for s, count in enumerate(hist):
            fh.write(f"{s},{count}\n")

    cm_path = out / f"confusion_n{n}.csv"
    with open(cm_path, "w") as fh:
        fh.write("bound\\size," + ",".join(str(s) for s in range(cm.dim)) + "\n")
        for b, row in enumerate(cm.counts):
            fh.write(f"{b}," + ",".join(str(x) for x in row) + "\n")

    heat_path = out / f"heatmap_n{n}.csv"
    with open(heat_path, "w") as fh:
        fh.write("bound\\size," + ",".join(str(s) for s in range(cm.dim)) + "\n")
        for b, row in enumerate(cm.column_normalized()):
            fh.write(f"{b}," + ",".join(f"{x:.6f}" for x in row) + "\n")

    metrics_path = out / f"metrics_n{n}.json"
    with open(metrics_path, "w") as fh:
        json.dump({**met.to_dict(), "middle_term": middle_term}, fh, indent=2, sort_keys=True)
        fh.write("\n")

    return {
        "histogram": hist_path,
        "confusion": cm_path,
        "heatmap": heat_path,
        "metrics": metrics_path,
    }
