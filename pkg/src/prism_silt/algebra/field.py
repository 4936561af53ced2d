"""Dense linear algebra over the prime field GF(p) on int64 numpy arrays.

Entries are kept reduced in [0, p).  With p < 2**31 every row operation
stays below 2**62, so no intermediate overflows.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 32003


def as_matrix(a, p: int, cols: int | None = None) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else np.zeros((0, cols or 0), dtype=np.int64)
    return m % p


def rref(a, p: int, cols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = as_matrix(a, p, cols).copy()
    rows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    m = np.asarray(a)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(a, p: int, cols: int | None = None) -> np.ndarray:
    """Basis of {x : a x = 0} as the rows of the returned array."""
    m = as_matrix(a, p, cols)
    ncols = m.shape[1]
    r, pivots = rref(m, p) if m.shape[0] else (m, [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-r[row, f]) % p
    return basis


def row_space(a, p: int, cols: int | None = None) -> np.ndarray:
    """Canonical (reduced echelon) basis of the row span."""
    m = as_matrix(a, p, cols)
    if m.shape[0] == 0:
        return m
    return rref(m, p)[0]


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a x = b, or None when inconsistent."""
    a = as_matrix(a, p)
    b = np.asarray(b, dtype=np.int64).reshape(a.shape[0], -1) % p
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if any(pc >= ncols for pc in pivots):
        return None
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, ncols:]
    return x


def inverse(a, p: int) -> np.ndarray | None:
    a = as_matrix(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, np.eye(n, dtype=np.int64), p)
    if x is None or rank(a, p) < n:
        return None
    return x


def is_invertible(a, p: int) -> bool:
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def matmul(a, b, p: int) -> np.ndarray:
    """Product mod p, splitting the inner dimension to avoid overflow."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1]
    # each chunk sums at most 2**62 / p**2 products
    step = max(1, (1 << 62) // (p * p))
    if inner <= step:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, inner, step):
        out = (out + a[:, s:s + step] @ b[s:s + step]) % p
    return out


def complement_basis(subspace: np.ndarray, dim: int, p: int) -> list[int]:
    """Indices of unit vectors that extend a basis of ``subspace`` to GF(p)^dim."""
    sub = row_space(subspace, p, cols=dim)
    _, pivots = (sub, []) if sub.shape[0] == 0 else rref(sub, p)
    return [c for c in range(dim) if c not in set(pivots)]
