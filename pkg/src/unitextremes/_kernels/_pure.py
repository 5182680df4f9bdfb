"""NumPy implementations of the batch kernels (fallback backend).

The compiled backend in ``_ext.pyx`` mirrors these routines operation for
operation, in the same order, so the two backends produce matching results
on identical inputs.
"""

import numpy as np

BACKEND_NAME = "python"

BISECT_ITERS = 47  # final bracket width 2^-47, well inside the 1e-12 contract


def invert_cdf_table(table, u):
    """Index of the first table entry >= u, clamped to the last entry."""
    table = np.ascontiguousarray(table, dtype=np.float64)
    u = np.ascontiguousarray(u, dtype=np.float64)
    idx = np.searchsorted(table, u, side="left")
    return np.minimum(idx, table.size - 1).astype(np.int64)


def segment_extremes(values, counts, take_max):
    """Max (or min) of consecutive runs of ``values`` with lengths ``counts``."""
    values = np.ascontiguousarray(values, dtype=np.float64)
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    if counts.size == 0:
        return np.empty(0, dtype=np.float64)
    starts = np.zeros(counts.size, dtype=np.intp)
    np.cumsum(counts[:-1], out=starts[1:])
    op = np.maximum if take_max else np.minimum
    return op.reduceat(values, starts)


def beta22_quantile(u):
    """Bisection inverse of x^2 (3 - 2x) on [0, 1]."""
    u = np.ascontiguousarray(u, dtype=np.float64)
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        go_up = mid * mid * (3.0 - 2.0 * mid) < u
        lo = np.where(go_up, mid, lo)
        hi = np.where(go_up, hi, mid)
    return 0.5 * (lo + hi)


def toppleone_quantile(u, a):
    """Bisection inverse of (x (2 - x))^a on [0, 1]."""
    u = np.ascontiguousarray(u, dtype=np.float64)
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        go_up = (mid * (2.0 - mid)) ** a < u
        lo = np.where(go_up, mid, lo)
        hi = np.where(go_up, hi, mid)
    return 0.5 * (lo + hi)


def power_series(s, p, abs_tol, max_terms):
    """Batch evaluation of sum_{n>=1} n^-p s^(n-1) for 0 <= s < 1.

    Returns ``(values, tail_bounds)``; an entry converged when its tail
    bound is <= abs_tol.  The bound after n terms is
    (n+1)^-p s^n / (1 - s), valid because n^-p is decreasing for p >= 0.
    """
    s = np.ascontiguousarray(s, dtype=np.float64)
    out = np.zeros_like(s)
    spow = np.ones_like(s)
    bound = np.full_like(s, np.inf)
    live = np.arange(s.size)
    n = 0
    while live.size and n < max_terms:
        n += 1
        c = float(n) ** -p
        sl = spow[live] * c
        out[live] += sl
        sl = spow[live] * s[live]
        spow[live] = sl
        b = (float(n + 1) ** -p) * sl / (1.0 - s[live])
        bound[live] = b
        live = live[b > abs_tol]
    return out, bound
