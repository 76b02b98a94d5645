# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dense tableau simplex, compiled backend.

Same pivot sequence as ``_simplex_py.simplex_maximize``; the two backends
are interchangeable and bit-identical.
"""

import numpy as np

OPTIMAL = 0
UNBOUNDED = 1


def simplex_maximize(A, b, c, double tol):
    """Maximize c.x subject to A x <= b, x >= 0, assuming every b[i] >= 0.

    Returns (status, objective, x).
    """
    cdef double[:, ::1] Av = np.ascontiguousarray(A, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef Py_ssize_t m = Av.shape[0]
    cdef Py_ssize_t n = Av.shape[1]
    cdef Py_ssize_t ncols = n + m

    Tarr = np.zeros((m + 1, ncols + 1), dtype=np.float64)
    cdef double[:, ::1] T = Tarr
    basis_arr = np.arange(n, ncols, dtype=np.intp)
    cdef Py_ssize_t[::1] basis = basis_arr

    cdef Py_ssize_t i, j, col, row
    cdef double a, ratio, best, piv, f

    for i in range(m):
        for j in range(n):
            T[i, j] = Av[i, j]
        T[i, n + i] = 1.0
        T[i, ncols] = bv[i]
    for j in range(n):
        T[m, j] = -cv[j]

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
        for j in range(ncols + 1):
            T[row, j] /= piv
        for i in range(m + 1):
            if i != row:
                f = T[i, col]
                if f != 0.0:
                    for j in range(ncols + 1):
                        T[i, j] -= f * T[row, j]
                    T[i, col] = 0.0
        basis[row] = col

    xarr = np.zeros(n, dtype=np.float64)
    cdef double[::1] x = xarr
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i, ncols]
    return OPTIMAL, T[m, ncols], xarr
