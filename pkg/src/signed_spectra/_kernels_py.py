"""Pure-numpy kernels (exact int64 arithmetic, no JIT).

Same surface as `_kernels_numba`; selected via SIGNED_SPECTRA_BACKEND=numpy
or used automatically when numba is unavailable.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def charpoly_int64(adj: np.ndarray) -> tuple[np.ndarray, int]:
    """Faddeev-LeVerrier recurrence over int64.

    Returns (coefficients of det(xI - A) in descending powers, residual).
    The residual counts nonzero entries of A*M_n + c_n*I, which is zero by
    Cayley-Hamilton; a nonzero value signals int64 overflow upstream.
    """
    n = adj.shape[0]
    c = np.zeros(n + 1, dtype=np.int64)
    c[0] = 1
    m = np.eye(n, dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        am = adj @ m
        c[k] = -np.trace(am) // k
        m = am + c[k] * eye
    return c, int(np.count_nonzero(m))


def canon_max_batch(bits: np.ndarray, pow2: np.ndarray) -> np.ndarray:
    """For each row of `bits` (0/1 per vertex pair), the maximum over all
    permutations of the relabelled graph's pair-bitmask.

    pow2[p, t] is 2**(index of pair t under permutation p), so a relabelled
    bitmask is just the integer dot product bits @ pow2[p].
    """
    wide = bits.astype(np.int64)
    best = wide @ pow2[0]
    for p in range(1, pow2.shape[0]):
        np.maximum(best, wide @ pow2[p], out=best)
    return best


def perm_images_one(bits: np.ndarray, pow2: np.ndarray) -> np.ndarray:
    """Relabelled bitmask of a single graph under every permutation."""
    return pow2 @ bits.astype(np.int64)
