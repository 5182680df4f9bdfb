"""Parameter inference for the one-parameter uniform-extreme families.

The correlated (threshold) model admits a closed-form MLE: the support of
the data pins theta at ``1 - max`` (maximum case) or ``min`` (minimum
case).  The independent geometric model does not, so its likelihood is
maximized numerically; a method-of-moments inversion of the closed mean
functions is also provided.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .closedforms import THETA_MIN, csug_mean_var, sug_mean_var
from .compound import Kind
from .numerics import Tolerance, maximize_1d

__all__ = [
    "Method",
    "EstimateResult",
    "Sample",
    "DegenerateSampleError",
    "csug_mle",
    "sug_mle_numeric",
    "moment_inversion",
]

_THETA_LO = 1e-9
_THETA_HI = 1.0 - 1e-9
_BOUNDARY_NOTE_BAND = 1e-4


class Method(str, enum.Enum):
    CLOSED_FORM_MLE = "closed-form-mle"
    NUMERIC_MLE = "numeric-mle"
    MOMENT_INVERSION = "moment-inversion"


class DegenerateSampleError(ValueError):
    """Sample is incompatible with any parameter value in (0, 1)."""


@dataclass(frozen=True)
class EstimateResult:
    theta_hat: float
    method: Method
    loglik: float | None
    evals: int
    note: str | None = None


@dataclass(frozen=True)
class Sample:
    """Validated observations, optionally labelled with the declared model."""

    values: np.ndarray
    declared_model: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("sample must be a nonempty 1-D array")
        if np.any(np.isnan(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
            raise ValueError("sample values must lie in [0, 1]")
        object.__setattr__(self, "values", arr)

    def __len__(self):
        return self.values.size


def _values(sample) -> np.ndarray:
    if isinstance(sample, Sample):
        return sample.values
    return Sample(np.asarray(sample, dtype=float)).values


def csug_mle(kind, sample) -> EstimateResult:
    """Closed-form MLE for the correlated model: 1 - max or the sample min."""
    kind = Kind(kind)
    values = _values(sample)
    if kind is Kind.MAX:
        theta_hat = 1.0 - float(np.max(values))
    else:
        theta_hat = float(np.min(values))
    if not 0.0 < theta_hat < 1.0:
        raise DegenerateSampleError(
            f"estimated theta {theta_hat} falls outside (0, 1); "
            "the sample is incompatible with this model"
        )
    n = values.size
    if kind is Kind.MAX:
        loglik = n * math.log(theta_hat / (1.0 - theta_hat)) - 2.0 * float(
            np.sum(np.log(1.0 - values))
        )
    else:
        loglik = n * math.log(theta_hat / (1.0 - theta_hat)) - 2.0 * float(
            np.sum(np.log(values))
        )
    return EstimateResult(theta_hat, Method.CLOSED_FORM_MLE, loglik, evals=0)


def _sug_loglik(theta: float, y: np.ndarray) -> float:
    # maximum-case likelihood: each density theta / (1 - (1-theta) y)^2
    return y.size * math.log(theta) - 2.0 * float(np.sum(np.log1p(-(1.0 - theta) * y)))


def sug_mle_numeric(kind, sample, tol: Tolerance | None = None) -> EstimateResult:
    """Numerical MLE for the independent geometric model.

    No closed form exists (the moment and likelihood equations mix
    polynomial and logarithmic terms), so the likelihood is maximized by a
    coarse grid scan refined with golden-section search; ties break toward
    smaller theta.
    """
    kind = Kind(kind)
    values = _values(sample)
    if np.any((values <= 0.0) | (values >= 1.0)):
        raise ValueError(
            "numeric MLE requires values strictly inside (0, 1); "
            "boundary values make the likelihood comparison degenerate"
        )
    y = values if kind is Kind.MAX else 1.0 - values
    tol = tol or Tolerance(abs_tol=1e-9, rel_tol=0.0, max_evals=10_000)
    result = maximize_1d(lambda t: _sug_loglik(t, y), _THETA_LO, _THETA_HI, tol)
    note = None
    if result.argmax <= _BOUNDARY_NOTE_BAND or result.argmax >= 1.0 - _BOUNDARY_NOTE_BAND:
        note = "near-boundary"
    return EstimateResult(result.argmax, Method.NUMERIC_MLE, result.value, result.evals, note)


@lru_cache(maxsize=None)
def _mean_fn_checked(family: str, kind: Kind):
    """Mean function of theta, with its monotonicity verified on a grid."""
    if family == "sug":
        fn = lambda t: sug_mean_var(kind, t)[0]
    elif family == "csug":
        fn = lambda t: csug_mean_var(kind, t)[0]
    else:
        raise ValueError("family must be 'sug' or 'csug'")
    grid = np.linspace(_THETA_LO, _THETA_HI, 1000)
    vals = np.array([fn(t) for t in grid])
    diffs = np.diff(vals)
    if not (np.all(diffs > 0) or np.all(diffs < 0)):
        raise RuntimeError(f"mean function for {family}-{kind.value} is not monotone")
    return fn, bool(vals[-1] > vals[0])


def moment_inversion(kind, family: str, sample_mean: float) -> EstimateResult:
    """Match the sample mean against the closed mean function by bisection.

    Only the first moment is used; the variance expressions mix squared
    logarithms and carry no invertibility guarantee.  A mean outside the
    attainable open range signals model misfit and raises ``ValueError``.
    """
    kind = Kind(kind)
    sample_mean = float(sample_mean)
    fn, increasing = _mean_fn_checked(family, kind)
    lo, hi = _THETA_LO, _THETA_HI
    f_lo, f_hi = fn(lo), fn(hi)
    lo_end, hi_end = (f_lo, f_hi) if increasing else (f_hi, f_lo)
    if not lo_end < sample_mean < hi_end:
        raise ValueError(
            f"sample mean {sample_mean} is outside the attainable range "
            f"({lo_end:.6g}, {hi_end:.6g}) of the {family}-{kind.value} mean; "
            "likely model misfit"
        )
    evals = 2
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        high_side = fn(mid) > sample_mean
        evals += 1
        if high_side == increasing:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-14:
            break
    theta_hat = 0.5 * (lo + hi)
    note = None
    if theta_hat <= _BOUNDARY_NOTE_BAND or theta_hat >= 1.0 - _BOUNDARY_NOTE_BAND:
        note = "near-boundary"
    return EstimateResult(theta_hat, Method.MOMENT_INVERSION, None, evals, note)
