"""Numba kernels for the exhaustive census.

Matrices with n <= 5 are packed into row-major integer keys (bit i*n+j
holds entry (i, j)), so the whole state space fits a dense byte array.
The BFS expands every one of the n(n-1) row additions per state; the
bound kernel recomputes the link/middle/cut report per key from scratch.
Both are scalar re-implementations of the pure-Python modules and are
cross-checked against them in the test suite.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

UNREACHED = 0xFF

# |GL(n, F2)| for n = 0..5.
GL_COUNTS = (1, 1, 6, 168, 20160, 9999360)


@njit(cache=True)
def bfs_kernel(n, gl_count):
    """Exact sizes for every invertible key; UNREACHED elsewhere."""
    total = 1 << (n * n)
    sizes = np.full(total, UNREACHED, dtype=np.uint8)
    mask = (1 << n) - 1
    ident = 0
    for i in range(n):
        ident |= 1 << (i * n + i)
    sizes[ident] = 0
    queue = np.empty(gl_count, dtype=np.int64)
    queue[0] = ident
    head = 0
    tail = 1
    while head < tail:
        key = queue[head]
        head += 1
        s = sizes[key] + 1
        for c in range(n):
            crow = (key >> (c * n)) & mask
            for t in range(n):
                if t != c:
                    nk = key ^ (crow << (t * n))
                    if sizes[nk] == UNREACHED:
                        sizes[nk] = s
                        queue[tail] = nk
                        tail += 1
    return sizes, tail


@njit(cache=True)
def _component_count(adj, count):
    """Components of a graph on `count` nodes given as neighbor bitmasks."""
    visited = 0
    comps = 0
    for i in range(count):
        if not (visited >> i) & 1:
            comps += 1
            frontier = 1 << i
            comp = 0
            while frontier != 0:
                comp |= frontier
                nxt = 0
                for j in range(count):
                    if (frontier >> j) & 1:
                        nxt |= adj[j]
                frontier = nxt & ~comp
            visited |= comp
    return comps


@njit(cache=True)
def _emp_dup(rows, n):
    emp = 0
    vals = np.empty(n, dtype=np.int64)
    k = 0
    for i in range(n):
        if rows[i] == 0:
            emp += 1
        else:
            vals[k] = rows[i]
            k += 1
    # insertion sort of at most n values
    for i in range(1, k):
        x = vals[i]
        j = i - 1
        while j >= 0 and vals[j] > x:
            vals[j + 1] = vals[j]
            j -= 1
        vals[j + 1] = x
    dup = 0
    i = 0
    while i < k:
        j = i
        while j < k and vals[j] == vals[i]:
            j += 1
        dup += (j - i) // 2
        i = j
    return emp, dup


# Codes for the c_perfect middle-term choice, mirroring bound.MIDDLE_TERMS.
MIDDLE_MIN = 0
MIDDLE_ROW = 1
MIDDLE_MAX = 2


@njit(cache=True)
def bound_for_key(key, n, middle_code):
    """LMC lower bound of the matrix packed in `key`; -1 if singular."""
    mask = (1 << n) - 1
    rows = np.empty(n, dtype=np.int64)
    for i in range(n):
        rows[i] = (key >> (i * n)) & mask

    # Gauss-Jordan inverse.
    a = rows.copy()
    inv = np.empty(n, dtype=np.int64)
    for i in range(n):
        inv[i] = 1 << i
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if (a[i] >> col) & 1:
                piv = i
                break
        if piv < 0:
            return -1
        tmp = a[col]
        a[col] = a[piv]
        a[piv] = tmp
        tmp = inv[col]
        inv[col] = inv[piv]
        inv[piv] = tmp
        for i in range(n):
            if i != col and (a[i] >> col) & 1:
                a[i] ^= a[col]
                inv[i] ^= inv[col]

    # Vertex graph: symmetrized off-diagonal support.
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j and (((rows[i] >> j) & 1) or ((rows[j] >> i) & 1)):
                adj[i] |= 1 << j
    v = _component_count(adj, n)

    # Row/column bipartite graph on 2n nodes.
    badj = np.zeros(2 * n, dtype=np.int64)
    for i in range(n):
        badj[i] = rows[i] << n
        for j in range(n):
            if (rows[i] >> j) & 1:
                badj[n + j] |= 1 << i
    e = _component_count(badj, 2 * n)

    # M' = (M AND inv(M)^T) XOR I.
    inv_t = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if (inv[j] >> i) & 1:
                inv_t[i] |= 1 << j
    mp = np.empty(n, dtype=np.int64)
    for i in range(n):
        mp[i] = (rows[i] & inv_t[i]) ^ (1 << i)

    emp_m, dup_m = _emp_dup(mp, n)
    cp3 = n + 2 * emp_m + dup_m
    if middle_code != MIDDLE_ROW:
        # M' of the transpose is the transpose of M'.
        mpt = np.zeros(n, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if (mp[j] >> i) & 1:
                    mpt[i] |= 1 << j
        emp_t, dup_t = _emp_dup(mpt, n)
        cp3_t = n + 2 * emp_t + dup_t
        if middle_code == MIDDLE_MIN:
            cp3 = min(cp3, cp3_t)
        else:
            cp3 = max(cp3, cp3_t)
    cp = cp3 // 3

    z = 0
    z_inv = 0
    for i in range(n):
        if not (rows[i] >> i) & 1:
            z += 1
        if not (inv[i] >> i) & 1:
            z_inv += 1

    ell = n - v
    c = e - v
    mid = n - cp
    best = mid + c
    if z > best:
        best = z
    if z_inv > best:
        best = z_inv
    return ell + best


@njit(cache=True, parallel=True)
def bounds_kernel(sizes, n, middle_code):
    """Per-key bounds for every invertible key; UNREACHED elsewhere."""
    total = sizes.shape[0]
    bounds = np.full(total, UNREACHED, dtype=np.uint8)
    for key in prange(total):
        if sizes[key] != UNREACHED:
            bounds[key] = bound_for_key(key, n, middle_code)
    return bounds


def warmup() -> None:
    """Force JIT compilation on a tiny instance so timed runs stay honest."""
    sizes, _ = bfs_kernel(2, GL_COUNTS[2])
    for code in (MIDDLE_MIN, MIDDLE_ROW, MIDDLE_MAX):
        bounds_kernel(sizes, 2, code)
