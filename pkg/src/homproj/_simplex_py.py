"""Dense tableau simplex, pure-Python backend.

Mirrors the compiled kernel in ``_simplex_cy.pyx`` operation for operation,
so both backends produce bit-identical pivots.
"""

import numpy as np

OPTIMAL = 0
UNBOUNDED = 1


def simplex_maximize(A, b, c, tol):
    """Maximize c.x subject to A x <= b, x >= 0, assuming every b[i] >= 0.

    The origin is then a basic feasible point, so a single phase suffices.
    Pivoting uses Bland's rule (lowest eligible index; ratio ties broken by
    the lowest basic-variable index), which cannot cycle.

    Returns (status, objective, x).
    """
    A = np.ascontiguousarray(A, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    c = np.ascontiguousarray(c, dtype=float)
    m, n = A.shape
    ncols = n + m
    T = np.zeros((m + 1, ncols + 1))
    T[:m, :n] = A
    T[:m, n:ncols] = np.eye(m)
    T[:m, ncols] = b
    T[m, :n] = -c
    basis = list(range(n, ncols))

    while True:
        col = -1
        for j in range(ncols):
            if T[m, j] < -tol:
                col = j
                break
        if col < 0:
            break
        row = -1
        best = 0.0
        for i in range(m):
            a = T[i, col]
            if a > tol:
                ratio = T[i, ncols] / a
                if row < 0 or ratio < best or (ratio == best and basis[i] < basis[row]):
                    row = i
                    best = ratio
        if row < 0:
            return UNBOUNDED, 0.0, np.zeros(n)
        piv = T[row, col]
        T[row, :] /= piv
        for i in range(m + 1):
            if i != row:
                f = T[i, col]
                if f != 0.0:
                    T[i, :] -= f * T[row, :]
                    T[i, col] = 0.0
        basis[row] = col

    x = np.zeros(n)
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i, ncols]
    return OPTIMAL, T[m, ncols], x
