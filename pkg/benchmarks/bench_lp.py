"""Compare the compiled and pure-Python simplex backends on the workloads
that dominate the verification harness: separation LPs from hull extraction
and exposed-diameter enumeration.

Run: python3 benchmarks/bench_lp.py
"""

import time

import numpy as np

from homproj import _simplex_py
from homproj.lp import margin_direction

try:
    from homproj import _simplex_cy
except ImportError:
    _simplex_cy = None


def _lp_batch(rng, count, rows, cols):
    batch = []
    for _ in range(count):
        D = rng.standard_normal((rows, cols))
        n = cols
        nv = 2 * n + 1
        A = np.zeros((rows + 2 * n, nv))
        A[:rows, :n] = -D
        A[:rows, n : 2 * n] = D
        A[:rows, 2 * n] = 1.0
        A[rows : rows + n, :n] = np.eye(n)
        A[rows + n :, n : 2 * n] = np.eye(n)
        b = np.concatenate([np.zeros(rows), np.ones(2 * n)])
        c = np.zeros(nv)
        c[2 * n] = 1.0
        batch.append((A, b, c, 1e-9 * max(1.0, float(np.abs(D).max()))))
    return batch


def _time(kernel, batch):
    start = time.perf_counter()
    for A, b, c, tol in batch:
        kernel.simplex_maximize(A, b, c, tol)
    return time.perf_counter() - start


def main():
    rng = np.random.default_rng(0)
    shapes = [
        ("hull separation (11 rows, dim 3)", 2000, 11, 3),
        ("diameter pair (22 rows, dim 4)", 2000, 22, 4),
        ("difference body (143 rows, dim 3)", 200, 143, 3),
    ]
    print(f"{'workload':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, count, rows, cols in shapes:
        batch = _lp_batch(rng, count, rows, cols)
        t_py = _time(_simplex_py, batch)
        if _simplex_cy is None:
            print(f"{name:40s} {t_py:9.3f}s    (no compiled backend)")
            continue
        t_cy = _time(_simplex_cy, batch)
        print(f"{name:40s} {t_py:9.3f}s {t_cy:9.3f}s {t_py / t_cy:7.1f}x")

    # sanity: both backends agree on a fresh workload
    D = rng.standard_normal((15, 3))
    delta, u = margin_direction(D)
    print(f"\nmargin_direction sanity: delta={delta:.6g}, |u|_inf={np.abs(u).max():.3f}")


if __name__ == "__main__":
    main()
