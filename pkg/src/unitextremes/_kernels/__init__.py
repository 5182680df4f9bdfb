"""Kernel backend selection.

The compiled Cython extension is preferred when it was built; otherwise the
NumPy fallback is used.  Set ``UNITEXTREMES_BACKEND=python`` to force the
fallback or ``UNITEXTREMES_BACKEND=c`` to insist on the extension (raising
if it is unavailable).
"""

import os

_requested = os.environ.get("UNITEXTREMES_BACKEND", "").strip().lower()
if _requested not in ("", "c", "python"):
    raise ValueError(
        f"UNITEXTREMES_BACKEND must be 'c' or 'python', got {_requested!r}"
    )

_impl = None
if _requested != "python":
    try:
        from . import _ext as _impl
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "UNITEXTREMES_BACKEND=c but the compiled extension is not built"
            )
        _impl = None
if _impl is None:
    from . import _pure as _impl

BACKEND = _impl.BACKEND_NAME
BISECT_ITERS = _impl.BISECT_ITERS
invert_cdf_table = _impl.invert_cdf_table
segment_extremes = _impl.segment_extremes
beta22_quantile = _impl.beta22_quantile
toppleone_quantile = _impl.toppleone_quantile
power_series = _impl.power_series


def active_backend() -> str:
    """Name of the kernel backend selected at import ('c' or 'python')."""
    return BACKEND
