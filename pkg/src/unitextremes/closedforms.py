"""The closed-form catalogue: every analytic density and moment in scope.

Each entry evaluates its printed density formula directly (not through the
generating-function machinery), so the catalogue and the general scheme in
:mod:`unitextremes.compound` stay independent of each other and can be
cross-checked.

Entries and parameters:

========================  =============================================
tag                       density of
========================  =============================================
sug-max / sug-min         extreme of Geometric(theta) many U[0,1]
csug-max / csug-min       extreme of the correlated construction, where
                          trials stop once one crosses the theta threshold
uniform-poisson-*         U[0,1] inputs, zero-truncated Poisson(lambda)
zipf-uniform-max          U[0,1] inputs, Zipf(2) count
geom-beta22-*             Beta(2,2) inputs, Geometric(theta)
poisson-beta22-*          Beta(2,2) inputs, truncated Poisson(lambda)
geom-arcsine-*            arcsine inputs, Geometric(theta)
poisson-arcsine-*         arcsine inputs, truncated Poisson(lambda)
geom-tl-* / poisson-tl-*  Topp-Leone(a) inputs
========================  =============================================

Two published formulas fail their own sanity checks and are corrected here,
with the literal variants kept for the ``as_printed`` diagnostics: the
geometric-arcsine minimum density (a misplaced parenthesis) and the
uniform-Poisson minimum variance (which would go negative for small
lambda).  See the check reports for both gaps.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from . import _kernels
from .compound import ExtremeModel, Kind
from .counts import Geometric, TruncatedPoisson, Zipf
from .inputs import Arcsine, Beta22, ToppLeone, Uniform
from .numerics import DEFAULT_TOLERANCE, Tolerance, integrate
from .rng import RandomSource

__all__ = [
    "Kind",
    "CatalogueModel",
    "SUG",
    "CSUG",
    "UniformPoisson",
    "ZipfUniform",
    "GeomBeta22",
    "PoissonBeta22",
    "GeomArcsine",
    "PoissonArcsine",
    "GeomToppLeone",
    "PoissonToppLeone",
    "CATALOGUE_TAGS",
    "from_tag",
    "sug_moment",
    "sug_mean_var",
    "csug_moment",
    "csug_mean_var",
    "uniform_poisson_stats",
    "UniformPoissonStats",
    "csug_sample",
]

THETA_MIN = 1e-12


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not THETA_MIN <= theta <= 1.0 - THETA_MIN:
        raise ValueError(f"theta must lie in [{THETA_MIN}, 1 - {THETA_MIN}]")
    return theta


def _check_lam(lam: float) -> float:
    lam = float(lam)
    if not lam > 0:
        raise ValueError("lambda must be positive")
    return lam


def _check_k(k) -> int:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError("moment order k must be a positive integer")
    return int(k)


def _power_integral(p: int, theta: float) -> float:
    """Integral of u^p over [theta, 1], with the exact log branch at p = -1."""
    if p == -1:
        return -math.log(theta)
    return (1.0 - theta ** (p + 1)) / (p + 1)


def sug_moment(kind, k: int, theta: float) -> float:
    """k-th raw moment of the geometric-count uniform extreme (finite sum)."""
    kind = Kind(kind)
    k = _check_k(k)
    theta = _check_theta(theta)
    if kind is Kind.MAX:
        s = sum(
            math.comb(k, j) * (-1.0) ** j * _power_integral(j - 2, theta)
            for j in range(k + 1)
        )
    else:
        s = sum(
            math.comb(k, j) * (-theta) ** j * _power_integral(k - j - 2, theta)
            for j in range(k + 1)
        )
    return theta / (1.0 - theta) ** (k + 1) * s


def sug_mean_var(kind, theta: float) -> tuple[float, float]:
    """Mean and variance of the geometric-count uniform extreme."""
    kind = Kind(kind)
    theta = _check_theta(theta)
    log_t = math.log(theta)
    if kind is Kind.MAX:
        mean = theta * (log_t + 1.0 / theta - 1.0) / (1.0 - theta) ** 2
    else:
        mean = theta * (theta - 1.0 - log_t) / (1.0 - theta) ** 2
    var = (theta**3 - 2.0 * theta**2 - theta**2 * log_t**2 + theta) / (1.0 - theta) ** 4
    return mean, var


def csug_moment(kind, k: int, theta: float) -> float:
    """k-th raw moment of the correlated (threshold-stopped) uniform extreme."""
    kind = Kind(kind)
    k = _check_k(k)
    theta = _check_theta(theta)
    if kind is Kind.MAX:
        s = sum(
            math.comb(k, j) * (-1.0) ** j * _power_integral(j - 2, theta)
            for j in range(k + 1)
        )
    else:
        s = _power_integral(k - 2, theta)
    return theta / (1.0 - theta) * s


def csug_mean_var(kind, theta: float) -> tuple[float, float]:
    """Mean and variance of the correlated uniform extreme.

    The variance shares the numerator of the independent-count version and
    equals it times (1 - theta)^2.
    """
    kind = Kind(kind)
    theta = _check_theta(theta)
    log_t = math.log(theta)
    if kind is Kind.MAX:
        mean = (theta * log_t - theta + 1.0) / (1.0 - theta)
    else:
        mean = -theta * log_t / (1.0 - theta)
    var = (theta**3 - 2.0 * theta**2 - theta**2 * log_t**2 + theta) / (1.0 - theta) ** 2
    return mean, var


class UniformPoissonStats(NamedTuple):
    mean: float
    var: float
    mgf: Callable[[float], float]


def uniform_poisson_stats(kind, lam: float, as_printed: bool = False) -> UniformPoissonStats:
    """Closed mean, variance and MGF for the truncated-Poisson uniform extreme.

    The MGF has a removable singularity at t = -lambda (max) or t = +lambda
    (min); within 1e-6 of it a fourth-order Taylor expansion of
    ``expm1(w)/w`` is used.  ``as_printed=True`` reproduces the published
    minimum-variance expression, which is inconsistent (negative for small
    lambda); the default is the corrected form, equal to the maximum
    variance as the uniform symmetry requires.
    """
    kind = Kind(kind)
    lam = _check_lam(lam)
    q = math.exp(-lam)
    d = -math.expm1(-lam)  # 1 - e^-lambda

    if kind is Kind.MAX:
        mean = 1.0 / d - 1.0 / lam
        var = 1.0 / lam**2 + 1.0 / d - 1.0 / d**2
    else:
        mean = 1.0 / lam - q / d
        if as_printed:
            var = 1.0 / lam**2 - q / (lam * d) - q**2 / d**2
        else:
            var = 1.0 / lam**2 - q / d - q**2 / d**2

    scale = lam * q / d if kind is Kind.MAX else lam / d
    shift = lam if kind is Kind.MAX else -lam

    def mgf(t: float) -> float:
        if t == 0.0:
            return 1.0
        w = t + shift
        if abs(w) < 1e-6:
            return scale * (1.0 + w / 2.0 + w**2 / 6.0 + w**3 / 24.0)
        return scale * math.expm1(w) / w

    return UniformPoissonStats(mean, var, mgf)


def csug_sample(kind, theta: float, src: RandomSource, size=None):
    """Sample the correlated uniform extreme by its exact construction.

    Draw G ~ Geometric(theta); the max case is the maximum of G uniforms on
    [0, 1 - theta], the min case the minimum of G uniforms on [theta, 1]
    (the pre-threshold trials, conditioned on not crossing).
    """
    kind = Kind(kind)
    theta = _check_theta(theta)
    m = 1 if size is None else int(size)
    g = Geometric(theta).sample_from_uniforms(src.uniforms(m))
    u = src.uniforms(int(g.sum()))
    if kind is Kind.MAX:
        draws = (1.0 - theta) * u
    else:
        draws = theta + (1.0 - theta) * u
    out = _kernels.segment_extremes(draws, g, kind is Kind.MAX)
    return float(out[0]) if size is None else out


class CatalogueModel:
    """Base class: formula evaluation plus quadrature fallbacks."""

    kind: Kind

    @property
    def tag(self) -> str:
        raise NotImplementedError

    @property
    def params(self) -> dict:
        raise NotImplementedError

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, 1.0)

    def _pdf_formula(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def pdf(self, x):
        """Printed density; zero outside the support (never an error)."""
        arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        with np.errstate(all="ignore"):
            val = self._pdf_formula(np.clip(arr, lo, hi))
        out = np.where((arr >= lo) & (arr <= hi), val, 0.0)
        return float(out) if np.ndim(x) == 0 else out

    def _cdf_formula(self, x: np.ndarray):
        return None  # no elementary antiderivative; quadrature fallback

    def cdf(self, x, tol: Tolerance = DEFAULT_TOLERANCE):
        arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        clipped = np.clip(arr, lo, hi)
        val = self._cdf_formula(clipped)
        if val is None:
            val = self._cdf_by_quadrature(clipped, tol)
        out = np.where(arr <= lo, 0.0, np.where(arr >= hi, 1.0, val))
        return float(out) if np.ndim(x) == 0 else out

    def _cdf_by_quadrature(self, clipped, tol):
        lo, _ = self.support
        flat = np.atleast_1d(clipped).ravel()
        points = np.unique(flat)
        acc = 0.0
        prev = lo
        cache = {}
        for p in points:
            if p > prev:
                acc += integrate(self.pdf, prev, p, tol)
                prev = p
            cache[p] = min(acc, 1.0)
        out = np.array([cache[v] for v in flat]).reshape(np.shape(clipped))
        return out

    def moment(self, k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        """k-th raw moment; closed form when the entry has one, else quadrature."""
        k = _check_k(k)
        closed = self._closed_moment(k)
        if closed is not None:
            return closed
        lo, hi = self.support
        return integrate(lambda x: x**k * self.pdf(x), lo, hi, tol)

    def _closed_moment(self, k: int):
        return None

    def mean(self, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        return self.moment(1, tol)

    def var(self, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        m1 = self.moment(1, tol)
        return self.moment(2, tol) - m1 * m1

    def mgf_numeric(self, t: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
        """Quadrature MGF; the oracle for any closed-form MGF."""
        lo, hi = self.support
        return integrate(lambda x: np.exp(t * x) * self.pdf(x), lo, hi, tol)

    def scheme_model(self) -> ExtremeModel | None:
        """The independent-count twin from the general scheme; None when
        the construction is correlated."""
        return None

    def sample(self, src: RandomSource, size=None):
        scheme = self.scheme_model()
        if scheme is None:
            raise NotImplementedError(f"{self.tag} does not define sampling")
        return scheme.sample(src, size)


class SUG(CatalogueModel):
    """Geometric(theta) many standard uniforms."""

    def __init__(self, kind, theta: float):
        self.kind = Kind(kind)
        self.theta = _check_theta(theta)

    @property
    def tag(self):
        return f"sug-{self.kind.value}"

    @property
    def params(self):
        return {"theta": self.theta}

    def _pdf_formula(self, x):
        t = self.theta
        if self.kind is Kind.MAX:
            return t / (1.0 - (1.0 - t) * x) ** 2
        return t / (t + (1.0 - t) * x) ** 2

    def _cdf_formula(self, x):
        t = self.theta
        if self.kind is Kind.MAX:
            return t * x / (1.0 - (1.0 - t) * x)
        return x / (t + (1.0 - t) * x)

    def _closed_moment(self, k):
        return sug_moment(self.kind, k, self.theta)

    def mean(self, tol=DEFAULT_TOLERANCE):
        return sug_mean_var(self.kind, self.theta)[0]

    def var(self, tol=DEFAULT_TOLERANCE):
        return sug_mean_var(self.kind, self.theta)[1]

    def scheme_model(self):
        return ExtremeModel(Uniform(), Geometric(self.theta), self.kind)


class CSUG(CatalogueModel):
    """Correlated construction: uniform trials until one crosses the
    theta threshold; the extreme is over the earlier trials."""

    def __init__(self, kind, theta: float):
        self.kind = Kind(kind)
        self.theta = _check_theta(theta)

    @property
    def tag(self):
        return f"csug-{self.kind.value}"

    @property
    def params(self):
        return {"theta": self.theta}

    @property
    def support(self):
        if self.kind is Kind.MAX:
            return (0.0, 1.0 - self.theta)
        return (self.theta, 1.0)

    def _pdf_formula(self, x):
        t = self.theta
        if self.kind is Kind.MAX:
            return t / ((1.0 - t) * (1.0 - x) ** 2)
        return t / ((1.0 - t) * x**2)

    def _cdf_formula(self, x):
        t = self.theta
        if self.kind is Kind.MAX:
            return t * x / ((1.0 - t) * (1.0 - x))
        return (x - t) / ((1.0 - t) * x)

    def _closed_moment(self, k):
        return csug_moment(self.kind, k, self.theta)

    def mean(self, tol=DEFAULT_TOLERANCE):
        return csug_mean_var(self.kind, self.theta)[0]

    def var(self, tol=DEFAULT_TOLERANCE):
        return csug_mean_var(self.kind, self.theta)[1]

    def sample(self, src, size=None):
        return csug_sample(self.kind, self.theta, src, size)


class UniformPoisson(CatalogueModel):
    """Zero-truncated Poisson(lambda) many standard uniforms."""

    def __init__(self, kind, lam: float):
        self.kind = Kind(kind)
        self.lam = _check_lam(lam)

    @property
    def tag(self):
        return f"uniform-poisson-{self.kind.value}"

    @property
    def params(self):
        return {"lambda": self.lam}

    def _pdf_formula(self, x):
        lam = self.lam
        d = -math.expm1(-lam)
        if self.kind is Kind.MAX:
            return lam * math.exp(-lam) * np.exp(lam * x) / d
        return lam * np.exp(-lam * x) / d

    def _cdf_formula(self, x):
        lam = self.lam
        if self.kind is Kind.MAX:
            return np.expm1(lam * x) / math.expm1(lam)
        return np.expm1(-lam * x) / math.expm1(-lam)

    def stats(self, as_printed: bool = False) -> UniformPoissonStats:
        return uniform_poisson_stats(self.kind, self.lam, as_printed)

    def mean(self, tol=DEFAULT_TOLERANCE):
        return self.stats().mean

    def var(self, tol=DEFAULT_TOLERANCE):
        return self.stats().var

    def _closed_moment(self, k):
        if k == 1:
            return self.stats().mean
        if k == 2:
            s = self.stats()
            return s.var + s.mean**2
        return None

    def mgf(self, t: float) -> float:
        """Closed-form MGF (with the removable-singularity fallback)."""
        return self.stats().mgf(t)

    def scheme_model(self):
        return ExtremeModel(Uniform(), TruncatedPoisson(self.lam), self.kind)


class ZipfUniform(CatalogueModel):
    """Zipf(2) many standard uniforms; only the maximum has a printed form."""

    kind = Kind.MAX

    def __init__(self):
        pass

    @property
    def tag(self):
        return "zipf-uniform-max"

    @property
    def params(self):
        return {}

    def _pdf_formula(self, x):
        c = 6.0 / math.pi**2
        safe = np.where(x > 0.0, x, 1.0)
        val = c * (-np.log1p(-x)) / safe
        return np.where(x > 0.0, val, c)  # limit at 0 is the n=1 term

    def _closed_moment(self, k):
        if k == 1:
            return 6.0 / math.pi**2
        return None

    def scheme_model(self):
        return ExtremeModel(Uniform(), Zipf(2.0), Kind.MAX)


class GeomBeta22(CatalogueModel):
    """Geometric(theta) many Beta(2,2) draws."""

    def __init__(self, kind, theta: float):
        self.kind = Kind(kind)
        self.theta = _check_theta(theta)

    @property
    def tag(self):
        return f"geom-beta22-{self.kind.value}"

    @property
    def params(self):
        return {"theta": self.theta}

    def _pdf_formula(self, x):
        t = self.theta
        if self.kind is Kind.MAX:
            return 6.0 * x * (1.0 - x) * t / (1.0 - (1.0 - t) * x**2 * (3.0 - 2.0 * x)) ** 2
        return (
            6.0
            * x
            * (1.0 - x)
            * t
            / (1.0 - (1.0 - t) * (2.0 * x**3 - 3.0 * x**2 + 1.0)) ** 2
        )

    def scheme_model(self):
        return ExtremeModel(Beta22(), Geometric(self.theta), self.kind)


class PoissonBeta22(CatalogueModel):
    """Truncated Poisson(lambda) many Beta(2,2) draws."""

    def __init__(self, kind, lam: float):
        self.kind = Kind(kind)
        self.lam = _check_lam(lam)

    @property
    def tag(self):
        return f"poisson-beta22-{self.kind.value}"

    @property
    def params(self):
        return {"lambda": self.lam}

    def _pdf_formula(self, x):
        lam = self.lam
        d = -math.expm1(-lam)
        if self.kind is Kind.MAX:
            return 6.0 * lam * x * (1.0 - x) * np.exp(-lam * (2.0 * x**3 - 3.0 * x**2 + 1.0)) / d
        return 6.0 * lam * x * (1.0 - x) * np.exp(-lam * (3.0 * x**2 - 2.0 * x**3)) / d

    def scheme_model(self):
        return ExtremeModel(Beta22(), TruncatedPoisson(self.lam), self.kind)


class GeomArcsine(CatalogueModel):
    """Geometric(theta) many arcsine draws.

    The published minimum density misplaces a parenthesis; the canonical
    form here follows the general scheme, and :meth:`pdf_as_printed`
    evaluates the literal published variant for comparison.
    """

    def __init__(self, kind, theta: float):
        self.kind = Kind(kind)
        self.theta = _check_theta(theta)

    @property
    def tag(self):
        return f"geom-arcsine-{self.kind.value}"

    @property
    def params(self):
        return {"theta": self.theta}

    def _pdf_formula(self, x):
        t = self.theta
        base = t / (np.pi * np.sqrt(x * (1.0 - x)))
        if self.kind is Kind.MAX:
            return base / (1.0 - (1.0 - t) * (2.0 / np.pi) * np.arcsin(np.sqrt(x))) ** 2
        return base / (1.0 - (1.0 - t) * (1.0 - (2.0 / np.pi) * np.arcsin(np.sqrt(x)))) ** 2

    def pdf_as_printed(self, x):
        """Literal published minimum density (the misprinted variant)."""
        if self.kind is not Kind.MIN:
            return self.pdf(x)
        arr = np.asarray(x, dtype=float)
        t = self.theta
        with np.errstate(all="ignore"):
            base = t / (np.pi * np.sqrt(arr * (1.0 - arr)))
            val = base / (1.0 - (1.0 - t) * (1.0 - 2.0 / np.pi) * np.arcsin(np.sqrt(arr))) ** 2
        out = np.where((arr >= 0.0) & (arr <= 1.0), val, 0.0)
        return float(out) if np.ndim(x) == 0 else out

    def scheme_model(self):
        return ExtremeModel(Arcsine(), Geometric(self.theta), self.kind)


class PoissonArcsine(CatalogueModel):
    """Truncated Poisson(lambda) many arcsine draws."""

    def __init__(self, kind, lam: float):
        self.kind = Kind(kind)
        self.lam = _check_lam(lam)

    @property
    def tag(self):
        return f"poisson-arcsine-{self.kind.value}"

    @property
    def params(self):
        return {"lambda": self.lam}

    def _pdf_formula(self, x):
        lam = self.lam
        d = -math.expm1(-lam)
        base = lam / (np.pi * np.sqrt(x * (1.0 - x)))
        asin = np.arcsin(np.sqrt(x))
        if self.kind is Kind.MAX:
            return base * np.exp(-lam * (1.0 - (2.0 / np.pi) * asin)) / d
        return base * np.exp(-2.0 * lam * asin / np.pi) / d

    def scheme_model(self):
        return ExtremeModel(Arcsine(), TruncatedPoisson(self.lam), self.kind)


class GeomToppLeone(CatalogueModel):
    """Geometric(theta) many Topp-Leone(a) draws."""

    def __init__(self, kind, theta: float, a: float):
        self.kind = Kind(kind)
        self.theta = _check_theta(theta)
        if not a > 0:
            raise ValueError("Topp-Leone shape a must be positive")
        self.a = float(a)

    @property
    def tag(self):
        return f"geom-tl-{self.kind.value}"

    @property
    def params(self):
        return {"theta": self.theta, "a": self.a}

    def _pdf_formula(self, x):
        t, a = self.theta, self.a
        f = 2.0 * a * (1.0 - x) * x ** (a - 1.0) * (2.0 - x) ** (a - 1.0)
        big_f = x**a * (2.0 - x) ** a
        if self.kind is Kind.MAX:
            return f * t / (1.0 - (1.0 - t) * big_f) ** 2
        return f * t / (1.0 - (1.0 - t) * (1.0 - big_f)) ** 2

    def scheme_model(self):
        return ExtremeModel(ToppLeone(self.a), Geometric(self.theta), self.kind)


class PoissonToppLeone(CatalogueModel):
    """Truncated Poisson(lambda) many Topp-Leone(a) draws."""

    def __init__(self, kind, lam: float, a: float):
        self.kind = Kind(kind)
        self.lam = _check_lam(lam)
        if not a > 0:
            raise ValueError("Topp-Leone shape a must be positive")
        self.a = float(a)

    @property
    def tag(self):
        return f"poisson-tl-{self.kind.value}"

    @property
    def params(self):
        return {"lambda": self.lam, "a": self.a}

    def _pdf_formula(self, x):
        lam, a = self.lam, self.a
        d = -math.expm1(-lam)
        f = 2.0 * a * (1.0 - x) * x ** (a - 1.0) * (2.0 - x) ** (a - 1.0)
        big_f = x**a * (2.0 - x) ** a
        if self.kind is Kind.MAX:
            return lam * f * np.exp(-lam * (1.0 - big_f)) / d
        return lam * f * np.exp(-lam * big_f) / d

    def scheme_model(self):
        return ExtremeModel(ToppLeone(self.a), TruncatedPoisson(self.lam), self.kind)


_REGISTRY = {
    "sug-max": (SUG, Kind.MAX, ("theta",)),
    "sug-min": (SUG, Kind.MIN, ("theta",)),
    "csug-max": (CSUG, Kind.MAX, ("theta",)),
    "csug-min": (CSUG, Kind.MIN, ("theta",)),
    "uniform-poisson-max": (UniformPoisson, Kind.MAX, ("lam",)),
    "uniform-poisson-min": (UniformPoisson, Kind.MIN, ("lam",)),
    "zipf-uniform-max": (ZipfUniform, Kind.MAX, ()),
    "geom-beta22-max": (GeomBeta22, Kind.MAX, ("theta",)),
    "geom-beta22-min": (GeomBeta22, Kind.MIN, ("theta",)),
    "poisson-beta22-max": (PoissonBeta22, Kind.MAX, ("lam",)),
    "poisson-beta22-min": (PoissonBeta22, Kind.MIN, ("lam",)),
    "geom-arcsine-max": (GeomArcsine, Kind.MAX, ("theta",)),
    "geom-arcsine-min": (GeomArcsine, Kind.MIN, ("theta",)),
    "poisson-arcsine-max": (PoissonArcsine, Kind.MAX, ("lam",)),
    "poisson-arcsine-min": (PoissonArcsine, Kind.MIN, ("lam",)),
    "geom-tl-max": (GeomToppLeone, Kind.MAX, ("theta", "a")),
    "geom-tl-min": (GeomToppLeone, Kind.MIN, ("theta", "a")),
    "poisson-tl-max": (PoissonToppLeone, Kind.MAX, ("lam", "a")),
    "poisson-tl-min": (PoissonToppLeone, Kind.MIN, ("lam", "a")),
}

CATALOGUE_TAGS = tuple(_REGISTRY)


def from_tag(tag: str, theta=None, lam=None, a=None) -> CatalogueModel:
    """Build a catalogue entry from its tag and the parameters it needs."""
    if tag not in _REGISTRY:
        raise ValueError(f"unknown model tag {tag!r}; known tags: {', '.join(CATALOGUE_TAGS)}")
    cls, kind, needed = _REGISTRY[tag]
    supplied = {"theta": theta, "lam": lam, "a": a}
    kwargs = {}
    for name in needed:
        if supplied[name] is None:
            flag = "lambda" if name == "lam" else name
            raise ValueError(f"model {tag!r} requires parameter --{flag}")
        kwargs[name] = supplied[name]
    for name, value in supplied.items():
        if value is not None and name not in needed:
            flag = "lambda" if name == "lam" else name
            raise ValueError(f"model {tag!r} does not take parameter --{flag}")
    if cls is ZipfUniform:
        return ZipfUniform()
    return cls(kind, **kwargs)
