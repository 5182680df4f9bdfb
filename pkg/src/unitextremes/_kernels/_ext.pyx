# cython: language_level=3
"""Compiled batch kernels: the hot loops behind sampling and series sums.

Mirrors ``_pure.py`` operation for operation so both backends agree on
identical inputs.
"""

import numpy as np

from libc.math cimport pow

BACKEND_NAME = "c"

BISECT_ITERS = 47

cdef int _BISECT_ITERS = 47


def invert_cdf_table(table, u):
    """Index of the first table entry >= u, clamped to the last entry."""
    cdef double[::1] tab = np.ascontiguousarray(table, dtype=np.float64)
    cdef double[::1] uu = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t m = uu.shape[0]
    cdef Py_ssize_t size = tab.shape[0]
    out_arr = np.empty(m, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, lo, hi, mid
    cdef double ui
    for i in range(m):
        ui = uu[i]
        lo = 0
        hi = size
        while lo < hi:
            mid = (lo + hi) >> 1
            if tab[mid] < ui:
                lo = mid + 1
            else:
                hi = mid
        out[i] = lo if lo < size else size - 1
    return out_arr


def segment_extremes(values, counts, take_max):
    """Max (or min) of consecutive runs of ``values`` with lengths ``counts``."""
    cdef double[::1] vals = np.ascontiguousarray(values, dtype=np.float64)
    cdef long long[::1] cnts = np.ascontiguousarray(counts, dtype=np.int64)
    cdef Py_ssize_t m = cnts.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef bint want_max = bool(take_max)
    cdef Py_ssize_t i, j, pos = 0
    cdef double best, v
    for i in range(m):
        best = vals[pos]
        pos += 1
        for j in range(1, cnts[i]):
            v = vals[pos]
            pos += 1
            if want_max:
                if v > best:
                    best = v
            else:
                if v < best:
                    best = v
        out[i] = best
    return out_arr


def beta22_quantile(u):
    """Bisection inverse of x^2 (3 - 2x) on [0, 1]."""
    cdef double[::1] uu = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t m = uu.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef int it
    cdef double lo, hi, mid, ui
    for i in range(m):
        ui = uu[i]
        lo = 0.0
        hi = 1.0
        for it in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if mid * mid * (3.0 - 2.0 * mid) < ui:
                lo = mid
            else:
                hi = mid
        out[i] = 0.5 * (lo + hi)
    return out_arr


def toppleone_quantile(u, double a):
    """Bisection inverse of (x (2 - x))^a on [0, 1]."""
    cdef double[::1] uu = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t m = uu.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef int it
    cdef double lo, hi, mid, ui
    for i in range(m):
        ui = uu[i]
        lo = 0.0
        hi = 1.0
        for it in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if pow(mid * (2.0 - mid), a) < ui:
                lo = mid
            else:
                hi = mid
        out[i] = 0.5 * (lo + hi)
    return out_arr


def power_series(s, double p, double abs_tol, long long max_terms):
    """Batch evaluation of sum_{n>=1} n^-p s^(n-1) for 0 <= s < 1.

    Returns ``(values, tail_bounds)``; converged entries have tail bound
    <= abs_tol.
    """
    cdef double[::1] ss = np.ascontiguousarray(s, dtype=np.float64)
    cdef Py_ssize_t m = ss.shape[0]
    out_arr = np.zeros(m, dtype=np.float64)
    bound_arr = np.full(m, np.inf, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double[::1] bound = bound_arr
    cdef Py_ssize_t i
    cdef long long n
    cdef double si, spow, acc, c, b
    for i in range(m):
        si = ss[i]
        spow = 1.0
        acc = 0.0
        b = bound[i]
        n = 0
        while n < max_terms:
            n += 1
            c = pow(<double> n, -p)
            acc += spow * c
            spow = spow * si
            b = pow(<double> (n + 1), -p) * spow / (1.0 - si)
            if b <= abs_tol:
                break
        out[i] = acc
        bound[i] = b
    return out_arr, bound_arr
