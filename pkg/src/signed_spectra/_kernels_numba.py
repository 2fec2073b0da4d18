"""Numba-compiled kernels (exact int64 arithmetic).

Mirrors `_kernels_py`; the two are interchangeable and cross-checked in
the test suite.  numba has no integer matmul, so the loops are explicit.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True, nogil=True)
def _charpoly_int64_impl(adj):
    n = adj.shape[0]
    c = np.zeros(n + 1, dtype=np.int64)
    c[0] = 1
    m = np.eye(n, dtype=np.int64)
    am = np.zeros((n, n), dtype=np.int64)
    for k in range(1, n + 1):
        for i in range(n):
            for j in range(n):
                acc = np.int64(0)
                for t in range(n):
                    acc += adj[i, t] * m[t, j]
                am[i, j] = acc
        tr = np.int64(0)
        for i in range(n):
            tr += am[i, i]
        c[k] = -tr // k
        for i in range(n):
            for j in range(n):
                m[i, j] = am[i, j]
            m[i, i] += c[k]
    resid = 0
    for i in range(n):
        for j in range(n):
            if m[i, j] != 0:
                resid += 1
    return c, resid


def charpoly_int64(adj: np.ndarray) -> tuple[np.ndarray, int]:
    c, resid = _charpoly_int64_impl(np.ascontiguousarray(adj, dtype=np.int64))
    return c, int(resid)


@njit(cache=True, nogil=True)
def _canon_max_batch_impl(bits, pow2):
    n_rows = bits.shape[0]
    n_perms = pow2.shape[0]
    n_pairs = pow2.shape[1]
    best = np.empty(n_rows, dtype=np.int64)
    for r in range(n_rows):
        top = np.int64(-1)
        for p in range(n_perms):
            acc = np.int64(0)
            for t in range(n_pairs):
                if bits[r, t]:
                    acc += pow2[p, t]
            if acc > top:
                top = acc
        best[r] = top
    return best


def canon_max_batch(bits: np.ndarray, pow2: np.ndarray) -> np.ndarray:
    return _canon_max_batch_impl(
        np.ascontiguousarray(bits, dtype=np.uint8),
        np.ascontiguousarray(pow2, dtype=np.int64),
    )


@njit(cache=True, nogil=True)
def _perm_images_one_impl(bits, pow2):
    n_perms = pow2.shape[0]
    n_pairs = pow2.shape[1]
    out = np.empty(n_perms, dtype=np.int64)
    for p in range(n_perms):
        acc = np.int64(0)
        for t in range(n_pairs):
            if bits[t]:
                acc += pow2[p, t]
        out[p] = acc
    return out


def perm_images_one(bits: np.ndarray, pow2: np.ndarray) -> np.ndarray:
    return _perm_images_one_impl(
        np.ascontiguousarray(bits, dtype=np.uint8),
        np.ascontiguousarray(pow2, dtype=np.int64),
    )
