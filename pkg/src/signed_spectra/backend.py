"""Kernel backend selection.

The hot integer kernels exist twice: a numba-compiled version and a
pure-numpy fallback with identical semantics.  The environment variable
SIGNED_SPECTRA_BACKEND picks one explicitly ("numba" or "numpy");
otherwise numba is used when importable and numpy otherwise.

`benchmarks/bench_backends.py` compares the two.
"""

from __future__ import annotations

import os

_requested = os.environ.get("SIGNED_SPECTRA_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"SIGNED_SPECTRA_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import _kernels_py as _impl

BACKEND_NAME = _impl.BACKEND_NAME
charpoly_int64 = _impl.charpoly_int64
canon_max_batch = _impl.canon_max_batch
perm_images_one = _impl.perm_images_one
