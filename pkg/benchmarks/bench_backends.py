#!/usr/bin/env python3
"""Side-by-side benchmark: numba kernels vs the pure-numpy fallback.

Times the two hot paths on identical inputs and checks the outputs agree:

* characteristic polynomials of every catalog member of order <= 20
  (plus negations), the workload of the family-fidelity check;
* canonical relabelling scans for the order-7 underlying-graph
  enumeration, the workload of the brute-force oracle.

Run:  python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from signed_spectra import _kernels_numba, _kernels_py
from signed_spectra import families
from signed_spectra.enumeration import _bits_to_rows, _perm_tables, underlying_graph_bitmasks
from signed_spectra.graphs import negate


def bench_charpoly(kernels, mats, rounds=3):
    best = float("inf")
    out = None
    for _ in range(rounds):
        t0 = time.perf_counter()
        out = [kernels.charpoly_int64(m)[0] for m in mats]
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_canon(kernels, rows, pow2, rounds=3):
    best = float("inf")
    out = None
    for _ in range(rounds):
        t0 = time.perf_counter()
        out = kernels.canon_max_batch(rows, pow2)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    print("preparing inputs ...")
    specs = families.instances_up_to(20)
    mats = []
    for s in specs:
        g = families.construct(s)
        mats.append(g.adjacency.astype(np.int64))
        mats.append(negate(g).adjacency.astype(np.int64))

    six = underlying_graph_bitmasks(6)
    base = 6 * 5 // 2
    candidates = [g | (mask << base) for g in six for mask in range(1 << 6)]
    _, pow2 = _perm_tables(7)
    rows = _bits_to_rows(candidates, base + 6)

    print("warming up the JIT ...")
    _kernels_numba.charpoly_int64(mats[0])
    _kernels_numba.canon_max_batch(rows[:2], pow2)

    print(f"\n{'workload':<38} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8}")
    print("-" * 70)

    t_np, out_np = bench_charpoly(_kernels_py, mats)
    t_nb, out_nb = bench_charpoly(_kernels_numba, mats)
    assert all(np.array_equal(a, b) for a, b in zip(out_np, out_nb))
    label = f"charpoly x{len(mats)} (orders <= 20)"
    print(f"{label:<38} {t_np:>10.3f} {t_nb:>10.3f} {t_np / t_nb:>7.1f}x")

    t_np, out_np = bench_canon(_kernels_py, rows, pow2)
    t_nb, out_nb = bench_canon(_kernels_numba, rows, pow2)
    assert np.array_equal(out_np, out_nb)
    label = f"canonical scan x{rows.shape[0]} (order 7)"
    print(f"{label:<38} {t_np:>10.3f} {t_nb:>10.3f} {t_np / t_nb:>7.1f}x")

    print("\nboth backends produced identical results")


if __name__ == "__main__":
    main()
