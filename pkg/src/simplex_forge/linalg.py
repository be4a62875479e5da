"""Exact integer linear algebra: Bareiss determinant and rank, overflow-safe products.

Matrices are 2-D numpy arrays of integers (int64 when entries are small,
object dtype holding Python ints otherwise).  Nothing here touches
floating point.
"""
from __future__ import annotations

import numpy as np

try:
    import flint
except ImportError:  # pragma: no cover
    flint = None

_INT64_SAFE = 2**62
# below this order the pure-Python routines are fast enough
BACKEND_THRESHOLD = 60


def as_rows(M) -> list[list[int]]:
    return [[int(v) for v in row] for row in np.asarray(M)]


def _check_square(M) -> int:
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"square matrix required, got shape {A.shape}")
    return A.shape[0]


def bareiss_determinant(M) -> int:
    """Determinant by fraction-free (Bareiss) elimination over the integers."""
    n = _check_square(M)
    if n == 0:
        return 1
    a = as_rows(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            m = ri[k]
            if m:
                a[i] = ri[:k + 1] + [(ri[j] * piv - m * rk[j]) // prev for j in range(k + 1, n)]
            elif piv != prev:
                a[i] = ri[:k + 1] + [ri[j] * piv // prev for j in range(k + 1, n)]
        prev = piv
    return sign * a[n - 1][n - 1]


def fraction_free_rank(M) -> int:
    """Rank over the rationals by fraction-free elimination with row/column search."""
    A = np.asarray(M)
    if A.ndim != 2:
        raise ValueError("2-D matrix required")
    rows = [r for r in as_rows(A) if any(r)]
    if not rows:
        return 0
    ncols = A.shape[1]
    rank = 0
    prev = 1
    col = 0
    while rows and col < ncols:
        pr = next((i for i, r in enumerate(rows) if r[col]), None)
        if pr is None:
            col += 1
            continue
        pivrow = rows.pop(pr)
        piv = pivrow[col]
        new_rows = []
        for r in rows:
            m = r[col]
            if m:
                nr = [(r[j] * piv - m * pivrow[j]) // prev for j in range(ncols)]
            else:
                nr = [r[j] * piv // prev for j in range(ncols)]
            if any(nr):
                new_rows.append(nr)
        rows = new_rows
        prev = piv
        rank += 1
        col += 1
    return rank


def _use_flint(M, method: str) -> bool:
    if method == "bareiss":
        return False
    if method == "flint":
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        return True
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    return flint is not None and max(np.asarray(M).shape, default=0) > BACKEND_THRESHOLD


def determinant(M, method: str = "auto") -> int:
    """Exact determinant.  ``method`` is "bareiss", "flint" or "auto" (size based)."""
    n = _check_square(M)
    if n and _use_flint(M, method):
        return int(flint.fmpz_mat(as_rows(M)).det())
    return bareiss_determinant(M)


def rank(M, method: str = "auto") -> int:
    """Exact rank over the rationals."""
    A = np.asarray(M)
    if A.size and _use_flint(A, method):
        return int(flint.fmpz_mat(as_rows(A)).rank())
    return fraction_free_rank(A)


def nullity(M, method: str = "auto") -> int:
    """Order minus rank over the rationals."""
    n = _check_square(M)
    return n - rank(M, method)


def _max_abs(A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return int(max(abs(int(A.max())), abs(int(A.min()))))


def matmul(A, B) -> np.ndarray:
    """Exact integer product; int64 when the result provably fits, Python ints otherwise."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    bound = _max_abs(A) * _max_abs(B) * max(A.shape[1], 1)
    if A.dtype != object and B.dtype != object and bound < _INT64_SAFE:
        return A.astype(np.int64) @ B.astype(np.int64)
    return A.astype(object) @ B.astype(object)


def matrix_power(A, m: int) -> np.ndarray:
    if m < 0:
        raise ValueError("negative power")
    R = np.eye(np.asarray(A).shape[0], dtype=np.int64)
    P = np.asarray(A)
    while m:
        if m & 1:
            R = matmul(R, P)
        m >>= 1
        if m:
            P = matmul(P, P)
    return R


def is_identity(M) -> bool:
    A = np.asarray(M)
    return A.shape[0] == A.shape[1] and bool(np.array_equal(A, np.eye(A.shape[0], dtype=np.int64)))
