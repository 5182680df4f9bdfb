"""Extremes over a random number of i.i.d. draws: the general scheme.

For an input law with density ``f`` and cdf ``F`` on [0, 1] and an
independent count law with pmf ``p``, the maximum over N draws has density
``f(x) * sum_n n F(x)^(n-1) p(n)`` and the minimum the same with
``1 - F(x)`` in place of ``F(x)``.  The inner sum is the derivative of the
count's probability generating function, so cdfs compose as PGF(F(x)).

This module is the universal numerical oracle against which every closed
form in :mod:`unitextremes.closedforms` is checked.  It requires N to be
independent of the draws; the correlated CSUG construction lives only in
the closed-form catalogue.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .counts import CountDistribution
from .inputs import UnitDistribution
from .numerics import DEFAULT_TOLERANCE, Tolerance, integrate
from .rng import RandomSource

__all__ = ["Kind", "ExtremeModel"]


class Kind(str, enum.Enum):
    MAX = "max"
    MIN = "min"


def _domain(x):
    arr = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        bad = (arr < 0.0) | (arr > 1.0) | np.isnan(arr)
    if np.any(bad):
        raise ValueError("x must lie in [0, 1]")
    return arr


@dataclass(frozen=True)
class ExtremeModel:
    """Max or min of ``count``-many i.i.d. draws from ``input_law``."""

    input_law: UnitDistribution
    count_law: CountDistribution
    kind: Kind

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))

    def _pgf_argument(self, x):
        F = self.input_law.cdf(x)
        return F if self.kind is Kind.MAX else 1.0 - np.asarray(F, dtype=float)

    def pdf(self, x):
        """Density f(x) * PGF'(F(x)) (max) or f(x) * PGF'(1 - F(x)) (min)."""
        arr = _domain(x)
        s = self._pgf_argument(arr)
        out = self.input_law.pdf(arr) * self.count_law.pgf_prime(s)
        return float(out) if np.ndim(x) == 0 else out

    def cdf(self, x):
        arr = _domain(x)
        if self.kind is Kind.MAX:
            out = self.count_law.pgf(self.input_law.cdf(arr))
        else:
            inner = 1.0 - np.asarray(self.input_law.cdf(arr), dtype=float)
            out = 1.0 - np.asarray(self.count_law.pgf(inner), dtype=float)
        return float(out) if np.ndim(x) == 0 else out

    def sample(self, src: RandomSource, size=None):
        """Exact process simulation: draw N, then the extreme of N draws.

        One uniform feeds each count, then one uniform feeds each of the
        N input draws through the quantile transform.
        """
        m = 1 if size is None else int(size)
        counts = self.count_law.sample_from_uniforms(src.uniforms(m))
        total = int(counts.sum())
        draws = self.input_law.quantile(src.uniforms(total))
        out = _kernels.segment_extremes(draws, counts, self.kind is Kind.MAX)
        return float(out[0]) if size is None else out

    def moment(self, k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        """k-th raw moment by quadrature of ``x^k pdf(x)`` (k >= 1)."""
        if not isinstance(k, (int, np.integer)) or k < 1:
            raise ValueError("moment order k must be a positive integer")
        return integrate(lambda x: x**k * self.pdf(x), 0.0, 1.0, tol)

    def mgf(self, t: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        """Moment generating function by quadrature; entire in t."""
        return integrate(lambda x: np.exp(t * x) * self.pdf(x), 0.0, 1.0, tol)
