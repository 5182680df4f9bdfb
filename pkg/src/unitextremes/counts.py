"""Discrete laws for the random sample size N.

Four families on the positive integers: Geometric(theta) starting at 1, the
shifted geometric starting at 2 (success conditioned on trial >= 2),
the zero-truncated Poisson(lambda), and Zipf(k) with pmf n^-k / zeta(k).

Sampling is exact inversion of the cumulative table against a caller-owned
uniform stream; Zipf inversion is capped at ``ZIPF_TAIL_CAP`` terms, so
draws beyond the cap clamp to it (tail probability ~ 1/(zeta(k) (k-1) cap^(k-1))).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .numerics import DEFAULT_TOLERANCE, BudgetExceededError, Tolerance, sum_series

__all__ = [
    "CountDistribution",
    "Geometric",
    "ShiftedGeometric",
    "TruncatedPoisson",
    "Zipf",
    "riemann_zeta",
    "ZIPF_TAIL_CAP",
]

ZIPF_TAIL_CAP = 2**20

# Cumulative tables stop once the remaining tail is below the resolution of
# a 53-bit uniform, so inversion can never fall off the precomputed range.
_TAIL_EPS = 2.0**-54
_MAX_TABLE = 2**22


def riemann_zeta(k: float, n_terms: int = 10_000) -> float:
    """zeta(k) for k > 1 by direct summation plus an integral tail.

    The tail beyond the summed range is ``N^(1-k)/(k-1)`` with the first two
    Euler-Maclaurin corrections, giving ~1e-14 accuracy already at the
    default length.
    """
    if not k > 1:
        raise ValueError("zeta(k) requires k > 1")
    n = np.arange(1, n_terms, dtype=float)
    head = float(np.sum(n**-k))
    big_n = float(n_terms)
    tail = big_n ** (1.0 - k) / (k - 1.0) + 0.5 * big_n**-k + k * big_n ** (-k - 1.0) / 12.0
    return head + tail


def _validate_n(n):
    arr = np.asarray(n)
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(arr == np.floor(arr)):
            raise ValueError("n must be integer")
        arr = arr.astype(np.int64)
    if np.any(arr < 1):
        raise ValueError("n must be a positive integer")
    return arr


def _like(x, result):
    return float(result) if np.ndim(x) == 0 else result


class CountDistribution:
    """Common interface for the sample-size law."""

    support_start: int = 1

    def pmf(self, n):
        raise NotImplementedError

    def pgf(self, s):
        """E(s^N) for s in [0, 1]."""
        raise NotImplementedError

    def pgf_prime(self, s):
        """d/ds E(s^N) = sum_n n s^(n-1) p(n); the kernel of the extreme pdf."""
        raise NotImplementedError

    def mean(self):
        raise NotImplementedError

    def mean_by_series(self, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        """E(N) summed term by term with the family's tail bound (oracle path)."""
        return sum_series(
            lambda n: n * float(self.pmf(n)),
            self._mean_tail_bound,
            tol,
        )

    def _mean_tail_bound(self, n: int) -> float:
        raise NotImplementedError

    def _cdf_table(self):
        """Cumulative pmf from ``support_start``; None when a table is impractical."""
        raise NotImplementedError

    def sample_from_uniforms(self, u: np.ndarray) -> np.ndarray:
        """Map uniforms to counts by inversion (one uniform per draw)."""
        table = self._cdf_table()
        if table is not None:
            return self.support_start + _kernels.invert_cdf_table(table, u)
        return self._sample_analytic(u)

    def _sample_analytic(self, u):
        raise NotImplementedError("no analytic inversion for this family")

    def sample(self, src, size=None):
        """Exact draws; scalar for ``size=None``, else an int64 array."""
        m = 1 if size is None else int(size)
        out = self.sample_from_uniforms(src.uniforms(m))
        return int(out[0]) if size is None else out

    def _check_s(self, s):
        arr = np.asarray(s, dtype=float)
        if np.any((arr < 0) | (arr > 1) | np.isnan(arr)):
            raise ValueError("s must lie in [0, 1]")
        return arr


@dataclass(frozen=True)
class Geometric(CountDistribution):
    """Trials to first success: pmf theta (1-theta)^(n-1), n >= 1."""

    theta: float
    support_start = 1

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise ValueError("theta must lie strictly inside (0, 1)")
        object.__setattr__(self, "_table_cache", [None])

    def pmf(self, n):
        arr = _validate_n(n)
        return _like(n, self.theta * (1.0 - self.theta) ** (arr - 1))

    def pgf(self, s):
        arr = self._check_s(s)
        return _like(s, self.theta * arr / (1.0 - (1.0 - self.theta) * arr))

    def pgf_prime(self, s):
        arr = self._check_s(s)
        return _like(s, self.theta / (1.0 - (1.0 - self.theta) * arr) ** 2)

    def mean(self):
        return 1.0 / self.theta

    def _mean_tail_bound(self, n):
        # sum_{m>n} m q^(m-1) = q^n ((n+1) - n q)/(1-q)^2, q = 1 - theta
        q = 1.0 - self.theta
        return self.theta * q**n * ((n + 1) - n * q) / (1.0 - q) ** 2

    def _cdf_table(self):
        cached = self._table_cache[0]
        if cached is not None:
            return cached
        q = 1.0 - self.theta
        length = 1 if q == 0.0 else min(_MAX_TABLE, max(1, math.ceil(math.log(_TAIL_EPS) / math.log(q))))
        if q > 0.0 and q**length > _TAIL_EPS:
            return None  # theta too small for a table; fall back to the log formula
        powers = np.concatenate(([1.0], np.cumprod(np.full(length - 1, q))))
        table = np.cumsum(self.theta * powers)
        self._table_cache[0] = table
        return table

    def _sample_analytic(self, u):
        n = 1 + np.floor(np.log1p(-u) / math.log1p(-self.theta)).astype(np.int64)
        return np.maximum(n, 1)


@dataclass(frozen=True)
class ShiftedGeometric(CountDistribution):
    """Geometric conditioned on success at trial 2 or later: support {2, 3, ...}.

    Distributionally 1 + Geometric(theta), which is also how it samples.
    """

    theta: float
    support_start = 2

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise ValueError("theta must lie strictly inside (0, 1)")
        object.__setattr__(self, "_base", Geometric(self.theta))

    def pmf(self, n):
        arr = _validate_n(n)
        out = np.where(
            arr >= 2,
            self.theta * (1.0 - self.theta) ** np.maximum(arr - 2, 0),
            0.0,
        )
        return _like(n, out)

    def pgf(self, s):
        arr = self._check_s(s)
        return _like(s, self.theta * arr * arr / (1.0 - (1.0 - self.theta) * arr))

    def pgf_prime(self, s):
        arr = self._check_s(s)
        denom = 1.0 - (1.0 - self.theta) * arr
        return _like(s, self.theta * arr * (2.0 - (1.0 - self.theta) * arr) / (denom * denom))

    def mean(self):
        return 1.0 + 1.0 / self.theta

    def _mean_tail_bound(self, n):
        # terms m p(m) = m theta q^(m-2); same geometric tail shifted by one
        q = 1.0 - self.theta
        return self.theta * q ** (n - 1) * ((n + 1) - n * q) / (1.0 - q) ** 2

    def sample_from_uniforms(self, u):
        return 1 + self._base.sample_from_uniforms(u)

    def _cdf_table(self):
        return self._base._cdf_table()


@dataclass(frozen=True)
class TruncatedPoisson(CountDistribution):
    """Poisson(lambda) conditioned on N >= 1."""

    lam: float
    support_start = 1

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("lambda must be positive")
        object.__setattr__(self, "_table_cache", [None])

    def _norm(self):
        return -math.expm1(-self.lam)  # 1 - e^-lambda

    def pmf(self, n):
        arr = _validate_n(n)
        log_p = arr * math.log(self.lam) - self.lam - np.vectorize(math.lgamma)(arr + 1.0)
        return _like(n, np.exp(log_p) / self._norm())

    def pgf(self, s):
        arr = self._check_s(s)
        return _like(s, np.expm1(self.lam * arr) / math.expm1(self.lam))

    def pgf_prime(self, s):
        arr = self._check_s(s)
        return _like(s, self.lam * np.exp(self.lam * arr) / math.expm1(self.lam))

    def mean(self):
        return self.lam / self._norm()

    def _mean_tail_bound(self, n):
        # term(m) = m p(m); successive ratios are lam/m, so beyond n the sum
        # is bounded geometrically once n + 1 > lam
        r = self.lam / (n + 1)
        if r >= 1.0:
            return math.inf
        return (n + 1) * float(self.pmf(n + 1)) / (1.0 - r)

    def _cdf_table(self):
        cached = self._table_cache[0]
        if cached is not None:
            return cached
        lam = self.lam
        p = lam / math.expm1(lam) if lam < 700 else math.exp(math.log(lam) - lam)
        terms = [p]
        cum = p
        n = 1
        while 1.0 - cum > _TAIL_EPS and p > 1e-300 and n < _MAX_TABLE:
            n += 1
            p *= lam / n
            terms.append(p)
            cum += p
        table = np.cumsum(np.asarray(terms))
        self._table_cache[0] = table
        return table


@dataclass(frozen=True)
class Zipf(CountDistribution):
    """Power law pmf n^-k / zeta(k), k > 1.

    The worked closed forms in the catalogue use k = 2; any k > 1 is
    accepted here, with series evaluation guarded by tail bounds.
    """

    k: float = 2.0
    support_start = 1
    zeta_k: float = field(init=False, repr=False, compare=False, default=0.0)

    # switch to the exact -log(1-s)/s kernel for k=2 this close to s=1,
    # where the guarded series would need >~1e5 terms
    _NEAR_ONE = 0.9995

    def __post_init__(self):
        if not self.k > 1:
            raise ValueError("Zipf exponent k must exceed 1")
        object.__setattr__(self, "zeta_k", riemann_zeta(self.k))
        object.__setattr__(self, "_table_cache", [None])

    def pmf(self, n):
        arr = _validate_n(n)
        return _like(n, arr.astype(float) ** -self.k / self.zeta_k)

    def _series(self, s_arr, p, tol_abs=1e-12, max_terms=1_000_000):
        values, bounds = _kernels.power_series(s_arr, p, tol_abs, max_terms)
        if np.any(bounds > tol_abs):
            raise BudgetExceededError(
                "Zipf series did not converge within %d terms" % max_terms,
                estimate=values,
                error_bound=float(np.max(bounds)),
            )
        return values

    def pgf(self, s):
        arr = np.atleast_1d(self._check_s(s)).astype(float)
        out = np.empty_like(arr)
        one = arr == 1.0
        out[one] = 1.0
        inner = ~one
        if np.any(inner):
            si = arr[inner]
            if self.k == 2.0:
                out[inner] = self._dilog(si) / self.zeta_k
            else:
                out[inner] = si * self._series(si, self.k) / self.zeta_k
        return _like(s, out if np.ndim(s) else out[0])

    def _dilog(self, s):
        """Li_2(s) on [0, 1) by series, with the reflection identity above 1/2."""
        out = np.empty_like(s)
        low = s <= 0.5
        if np.any(low):
            sl = s[low]
            out[low] = sl * self._series(sl, 2.0)
        high = ~low
        if np.any(high):
            sh = s[high]
            w = 1.0 - sh
            li_w = w * self._series(w, 2.0)
            out[high] = math.pi**2 / 6.0 - np.log(sh) * np.log(w) - li_w
        return out

    def pgf_prime(self, s):
        arr = np.atleast_1d(self._check_s(s)).astype(float)
        out = np.empty_like(arr)
        one = arr == 1.0
        if np.any(one):
            out[one] = (
                riemann_zeta(self.k - 1.0) / self.zeta_k if self.k > 2 else math.inf
            )
        near = (~one) & (arr > self._NEAR_ONE) if self.k == 2.0 else np.zeros_like(one)
        if np.any(near):
            sn = arr[near]
            out[near] = -np.log1p(-sn) / (sn * self.zeta_k)
        rest = ~(one | near)
        if np.any(rest):
            out[rest] = self._series(arr[rest], self.k - 1.0) / self.zeta_k
        return _like(s, out if np.ndim(s) else out[0])

    def mean(self):
        return riemann_zeta(self.k - 1.0) / self.zeta_k if self.k > 2 else math.inf

    def _mean_tail_bound(self, n):
        # integral bound on sum_{m>n} m^(1-k); infinite for k <= 2
        if self.k <= 2:
            return math.inf
        return n ** (2.0 - self.k) / ((self.k - 2.0) * self.zeta_k)

    def _cdf_table(self):
        cached = self._table_cache[0]
        if cached is not None:
            return cached
        n = np.arange(1, ZIPF_TAIL_CAP + 1, dtype=float)
        table = np.cumsum(n**-self.k / self.zeta_k)
        self._table_cache[0] = table
        return table
