"""
Exact rank of integer matrices by fraction-free (Bareiss) elimination.

Every intermediate entry of Bareiss elimination is a minor of the input, so
with a Hadamard bound H on all minors the products formed never exceed 2*H^2.
When H < 2^30 the elimination runs in int64, either through the numba kernel
or the numpy kernel; otherwise it runs on Python integers (numpy object
arrays).

Set ``KPSCHUBERT_JIT=0`` to force the numpy kernel.
"""

from __future__ import annotations

import math
import os

import numpy as np

__all__ = ["rank", "bareiss_rank_numpy", "bareiss_rank_jit", "hadamard_log2", "backend", "HAVE_NUMBA"]

_INT64_LOG2_LIMIT = 30.0

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def _jit_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("KPSCHUBERT_JIT", "1").lower() not in ("0", "false", "no", "off")


def backend() -> str:
    return "numba" if _jit_enabled() else "numpy"


def bareiss_rank_numpy(a: np.ndarray) -> int:
    """Rank by Bareiss elimination with row pivoting and column skipping.

    Works on int64 arrays (caller guarantees no overflow) and on object arrays
    of Python ints.  The input is not modified.
    """
    a = np.array(a, copy=True)
    m, n = a.shape
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        p = a[r, c]
        if r + 1 < m and c + 1 < n:
            a[r + 1:, c + 1:] = (p * a[r + 1:, c + 1:] - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
        a[r + 1:, c] = 0
        prev = p
        r += 1
    return r


if HAVE_NUMBA:
    @njit(cache=True, nogil=True)
    def _bareiss_rank_kernel(a):  # pragma: no cover - compiled
        m, n = a.shape
        r = 0
        prev = np.int64(1)
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    t = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = t
            p = a[r, c]
            for i in range(r + 1, m):
                f = a[i, c]
                for j in range(c + 1, n):
                    a[i, j] = (p * a[i, j] - f * a[r, j]) // prev
                a[i, c] = 0
            prev = p
            r += 1
        return r


def bareiss_rank_jit(a: np.ndarray) -> int:
    """int64 Bareiss rank through the numba kernel (input not modified)."""
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not available")
    return int(_bareiss_rank_kernel(np.array(a, dtype=np.int64, copy=True)))


def hadamard_log2(a: np.ndarray) -> float:
    """log2 of a bound on the absolute value of every minor of ``a``."""
    if a.size == 0:
        return 0.0
    norms = sorted(
        (math.sqrt(float(sum(int(v) * int(v) for v in row))) for row in a),
        reverse=True,
    )
    k = min(a.shape)
    return sum(math.log2(v) for v in norms[:k] if v > 1.0)


def rank(matrix) -> int:
    """Exact rank of an integer matrix (list of lists or ndarray)."""
    a = np.asarray(matrix, dtype=object)
    if a.ndim != 2:
        raise ValueError("rank needs a 2-d matrix")
    if a.size == 0:
        return 0
    if hadamard_log2(a) <= _INT64_LOG2_LIMIT:
        a = a.astype(np.int64)
        if _jit_enabled():
            return bareiss_rank_jit(a)
        return bareiss_rank_numpy(a)
    return bareiss_rank_numpy(a)
