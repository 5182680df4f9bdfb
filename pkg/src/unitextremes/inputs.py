"""Continuous input laws on the unit interval.

Four families: the standard uniform, Beta(2,2), the arcsine law
Beta(1/2,1/2), and the Topp-Leone family TL(a) with cdf ``(x(2-x))^a``.
All methods accept scalars or arrays and validate the [0, 1] domain.
The arcsine density is reported as ``inf`` at the endpoints rather than
being clamped; the quadrature rule never lands there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

__all__ = ["UnitDistribution", "Uniform", "Beta22", "Arcsine", "ToppLeone"]


def _domain(x, name="x"):
    arr = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        bad = (arr < 0.0) | (arr > 1.0) | np.isnan(arr)
    if np.any(bad):
        raise ValueError(f"{name} must lie in [0, 1]")
    return arr


def _like(x, result):
    return float(result) if np.ndim(x) == 0 else result


class UnitDistribution:
    """Common interface: pdf, cdf and quantile on [0, 1]."""

    name: str = ""

    def pdf(self, x):
        raise NotImplementedError

    def cdf(self, x):
        raise NotImplementedError

    def quantile(self, u):
        raise NotImplementedError


@dataclass(frozen=True)
class Uniform(UnitDistribution):
    name = "uniform"

    def pdf(self, x):
        arr = _domain(x)
        return _like(x, np.ones_like(arr))

    def cdf(self, x):
        arr = _domain(x)
        return _like(x, arr.copy())

    def quantile(self, u):
        arr = _domain(u, "u")
        return _like(u, arr.copy())


@dataclass(frozen=True)
class Beta22(UnitDistribution):
    name = "beta22"

    def pdf(self, x):
        arr = _domain(x)
        return _like(x, 6.0 * arr * (1.0 - arr))

    def cdf(self, x):
        arr = _domain(x)
        return _like(x, arr * arr * (3.0 - 2.0 * arr))

    def quantile(self, u):
        arr = np.atleast_1d(_domain(u, "u")).astype(float)
        q = _kernels.beta22_quantile(arr)
        q = np.where(arr == 0.0, 0.0, np.where(arr == 1.0, 1.0, q))
        return _like(u, q if np.ndim(u) else q[0])


@dataclass(frozen=True)
class Arcsine(UnitDistribution):
    """Beta(1/2, 1/2); the density is unbounded at both endpoints."""

    name = "arcsine"

    def pdf(self, x):
        arr = _domain(x)
        with np.errstate(divide="ignore"):
            out = 1.0 / (np.pi * np.sqrt(arr * (1.0 - arr)))
        return _like(x, out)

    def cdf(self, x):
        arr = _domain(x)
        return _like(x, (2.0 / np.pi) * np.arcsin(np.sqrt(arr)))

    def quantile(self, u):
        arr = _domain(u, "u")
        return _like(u, np.sin(0.5 * np.pi * arr) ** 2)


@dataclass(frozen=True)
class ToppLeone(UnitDistribution):
    """TL(a) with cdf ``(x(2-x))^a``; reduces to Beta(1,2) at a=1."""

    a: float = 1.0
    name = "toppleone"

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError("Topp-Leone shape a must be positive")

    def pdf(self, x):
        arr = _domain(x)
        a = self.a
        with np.errstate(divide="ignore"):
            out = 2.0 * a * (1.0 - arr) * arr ** (a - 1.0) * (2.0 - arr) ** (a - 1.0)
        return _like(x, out)

    def cdf(self, x):
        arr = _domain(x)
        return _like(x, (arr * (2.0 - arr)) ** self.a)

    def quantile(self, u):
        arr = np.atleast_1d(_domain(u, "u")).astype(float)
        q = _kernels.toppleone_quantile(arr, self.a)
        q = np.where(arr == 0.0, 0.0, np.where(arr == 1.0, 1.0, q))
        return _like(u, q if np.ndim(u) else q[0])
