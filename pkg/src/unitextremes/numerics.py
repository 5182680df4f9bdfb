"""Shared numerical machinery: adaptive quadrature, guarded series, 1-D search.

Everything here is deterministic and pure; evaluation budgets are enforced
through :class:`Tolerance` and overruns raise :class:`BudgetExceededError`
carrying the best estimate obtained so far.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "BudgetExceededError",
    "integrate",
    "sum_series",
    "maximize_1d",
    "MaximizeResult",
]


@dataclass(frozen=True)
class Tolerance:
    """Accuracy targets and an evaluation budget for a numerical routine."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_evals: int = 1_000_000

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.rel_tol < 0:
            raise ValueError("rel_tol must be nonnegative")
        if self.max_evals < 1:
            raise ValueError("max_evals must be at least 1")


DEFAULT_TOLERANCE = Tolerance()


class BudgetExceededError(RuntimeError):
    """The evaluation budget ran out before the tolerance was met.

    Attributes
    ----------
    estimate : best value computed before giving up (float or ndarray)
    error_bound : bound on the error of ``estimate`` (float or ndarray)
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


# 15-point Kronrod extension of 7-point Gauss (QUADPACK constants).  All
# nodes are interior to the panel, so endpoint singularities are never
# evaluated directly.
_XGK_POS = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ]
)
_WGK_POS = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG_POS = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# Full 15-node arrays: nodes ordered [-x0, ..., -x6, 0, x6, ..., x0].
_NODES = np.concatenate([-_XGK_POS[:-1], _XGK_POS[::-1]])
_WK = np.concatenate([_WGK_POS[:-1], _WGK_POS[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes.
_GAUSS_IDX = np.arange(1, 15, 2)
_WG = np.concatenate([_WG_POS[:-1], _WG_POS[::-1]])


def _node_evaluator(f):
    """Wrap ``f`` so it can be called on a node array.

    Vectorized callables are used directly; scalar-only callables fall back
    to a point-by-point loop.
    """
    state = {"vectorized": True}

    def evaluate(x):
        if state["vectorized"]:
            try:
                y = np.asarray(f(x), dtype=float)
                if y.shape == x.shape:
                    return y
            except (TypeError, ValueError):
                pass
            state["vectorized"] = False
        return np.array([float(f(xi)) for xi in x], dtype=float)

    return evaluate


def integrate(f, a: float, b: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Integrate ``f`` over ``[a, b]`` with globally adaptive Gauss-Kronrod.

    The rule never evaluates ``f`` at ``a`` or ``b``, so integrable endpoint
    singularities need no special casing.  The result satisfies an estimated
    error of at most ``max(abs_tol, rel_tol * |I|)``; if the budget of
    ``tol.max_evals`` function evaluations is exhausted first, a
    :class:`BudgetExceededError` carrying the running estimate is raised.
    """
    if not a < b:
        raise ValueError("integration requires a < b")
    evaluate = _node_evaluator(f)

    def panel(lo, hi):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        x = mid + half * _NODES
        # Rounding can push the extreme nodes onto the panel ends once the
        # panel is very thin; keep the rule strictly open.
        np.clip(x, np.nextafter(lo, hi), np.nextafter(hi, lo), out=x)
        fx = evaluate(x)
        if not np.all(np.isfinite(fx)):
            raise ValueError("integrand returned a non-finite value inside the interval")
        resk = float(_WK @ fx)
        resg = float(_WG @ fx[_GAUSS_IDX])
        value = resk * half
        abserr = abs((resk - resg) * half)
        resabs = float(_WK @ np.abs(fx)) * half
        # Rescale against the mean-removed mass so rough panels report a
        # conservative error (the usual Kronrod heuristic).
        resasc = float(_WK @ np.abs(fx - 0.5 * resk)) * half
        if resasc != 0.0 and abserr != 0.0:
            abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
        # A power-law singularity at an endpoint looks the same at every
        # scale, so Kronrod-vs-Gauss agreement there is meaningless; panels
        # touching the original endpoints keep the full mean-removed mass
        # as their error until they are themselves negligible.
        if lo == a or hi == b:
            abserr = max(abserr, resasc)
        if np.any(x[1:] <= x[:-1]):
            # Nodes have collided with the floating-point grid; the rule
            # value is untrustworthy, so confess the whole panel mass.
            abserr = max(abserr, resabs)
        abserr = max(abserr, 50.0 * np.finfo(float).eps * resabs)
        return value, abserr

    def close_tail(lo, hi):
        """Estimate an endpoint panel by geometric ring extrapolation.

        Three dyadic rings walking toward the end give masses r0, r1, r2;
        for a power-law (or smooth) integrand their ratio is constant, so
        the rest of the tail is r2 * rho / (1 - rho).  Returns the panel
        estimate, the summed ring rule errors, and the outermost ring mass
        (used to compare estimates across consecutive depths).
        """
        h = hi - lo
        if lo == a:  # walking toward the left end
            cuts = (hi, lo + 0.5 * h, lo + 0.25 * h, lo + 0.125 * h)
        else:
            cuts = (lo, lo + 0.5 * h, lo + 0.75 * h, lo + 0.875 * h)
        rings = []
        err = 0.0
        for outer, inner in zip(cuts, cuts[1:]):
            left, right = min(outer, inner), max(outer, inner)
            value, ring_err = panel(left, right)
            rings.append(value)
            err += ring_err
        r0, r1, r2 = rings
        rho = r2 / r1 if r1 != 0.0 else 0.0
        rho = max(-0.99, min(0.99, rho))
        closure = r2 * rho / (1.0 - rho)
        return r0 + r1 + r2 + closure, err, r0

    # Endpoint panels at least this thin may be closed by extrapolation.  A
    # closure is accepted only when it agrees with the closure of the
    # half-depth panel (the tail estimate has stabilized); until then the
    # panel keeps splitting and the closure is retried deeper.
    h_close = 2.0**-16
    chain_state = {}  # endpoint -> (depth, estimate, outer ring mass)

    evals = 15
    value, err = panel(a, b)
    total = value
    heap = [(-err, 0, a, b, value)]
    tie = 1
    dead_err = 0.0
    live_err = err

    while True:
        total_err = live_err + dead_err
        if total_err <= max(tol.abs_tol, tol.rel_tol * abs(total)):
            return total
        if not heap:
            raise BudgetExceededError(
                "quadrature cannot certify the requested tolerance",
                estimate=total,
                error_bound=total_err,
            )
        if evals + 45 > tol.max_evals:
            raise BudgetExceededError(
                "quadrature budget of %d evaluations exhausted" % tol.max_evals,
                estimate=total,
                error_bound=total_err,
            )
        neg_err, _, lo, hi, parent_value = heapq.heappop(heap)
        parent_err = -neg_err
        live_err -= parent_err
        width = hi - lo
        end = a if lo == a else (b if hi == b else None)
        if end is not None and width <= h_close:
            estimate, ring_err, outer_ring = close_tail(lo, hi)
            evals += 45
            previous = chain_state.get(end)
            chain_state[end] = (width, estimate, outer_ring)
            if previous is not None and previous[0] == 2.0 * width:
                # Consecutive depths must tell the same story about the tail.
                gap = abs(previous[1] - (previous[2] + estimate))
                target = max(tol.abs_tol, tol.rel_tol * abs(total))
                if 3.0 * gap + ring_err <= 0.35 * target:
                    total += estimate - parent_value
                    dead_err += 3.0 * gap + ring_err
                    continue
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            # Panel width at the floating-point floor; retire it with a
            # conservative error so an uncertifiable target fails honestly.
            dead_err += parent_err
            continue
        left_value, left_err = panel(lo, mid)
        right_value, right_err = panel(mid, hi)
        evals += 30
        total += left_value + right_value - parent_value
        live_err += left_err + right_err
        heapq.heappush(heap, (-left_err, tie, lo, mid, left_value))
        heapq.heappush(heap, (-right_err, tie + 1, mid, hi, right_value))
        tie += 2


def sum_series(
    term: Callable[[int], float],
    tail_bound: Callable[[int], float],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> float:
    """Sum ``term(1) + term(2) + ...`` until ``tail_bound(n) <= abs_tol``.

    ``tail_bound(n)`` must bound the magnitude of everything after the n-th
    term.  Exhausting ``max_evals`` terms raises :class:`BudgetExceededError`
    with the partial sum and the last tail bound.
    """
    total = 0.0
    bound = math.inf
    for n in range(1, tol.max_evals + 1):
        t = term(n)
        if not math.isfinite(t):
            raise ValueError(f"series term {n} is not finite")
        total += t
        bound = tail_bound(n)
        if bound <= tol.abs_tol:
            return total
    raise BudgetExceededError(
        "series budget of %d terms exhausted" % tol.max_evals,
        estimate=total,
        error_bound=bound,
    )


class MaximizeResult(NamedTuple):
    argmax: float
    value: float
    evals: int


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def maximize_1d(
    f,
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
    grid_points: int = 256,
) -> MaximizeResult:
    """Maximize ``f`` on ``(lo, hi)`` by coarse grid scan plus golden section.

    For unimodal ``f`` the argmax is located to within ``abs_tol``; for
    general ``f`` the result is the refined best grid point.  Non-finite
    function values raise ``ValueError``.  On a monotone objective the
    returned point sits at the corresponding end of the interval.
    """
    if not lo < hi:
        raise ValueError("maximize_1d requires lo < hi")

    evals = 0

    def call(x):
        nonlocal evals
        evals += 1
        y = float(f(x))
        if not math.isfinite(y):
            raise ValueError(f"objective is not finite at x={x!r}")
        return y

    xs = lo + (hi - lo) * (np.arange(grid_points) + 0.5) / grid_points
    ys = np.array([call(x) for x in xs])
    best = int(np.argmax(ys))  # ties resolve to the smaller x
    a = xs[best - 1] if best > 0 else lo
    b = xs[best + 1] if best < grid_points - 1 else hi

    best_x, best_y = float(xs[best]), float(ys[best])
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = call(c), call(d)
    while b - a > tol.abs_tol and evals < tol.max_evals:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = call(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = call(d)
    for x, y in ((c, fc), (d, fd)):
        if y > best_y:
            best_x, best_y = x, y
    # Report the bracket end itself when the refinement ran into it.
    for edge in (lo, hi):
        if abs(best_x - edge) <= tol.abs_tol:
            best_x = edge
            break
    return MaximizeResult(best_x, best_y, evals)
