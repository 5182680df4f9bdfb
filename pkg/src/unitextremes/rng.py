"""Seedable deterministic uniform streams.

A :class:`RandomSource` is a single-owner stream of 53-bit uniforms on
``[0, 1)``.  The same ``(seed, stream_id)`` pair always reproduces the same
sequence; distinct stream ids give independent-quality streams, which is how
parallel work is partitioned (one stream per subtask, never shared).
"""

from __future__ import annotations

import numpy as np

__all__ = ["RandomSource"]

_UINT64_MAX = 2**64 - 1


class RandomSource:
    """Deterministic uniform generator keyed by ``(seed, stream_id)``."""

    def __init__(self, seed: int = 0, stream_id: int = 0):
        for name, value in (("seed", seed), ("stream_id", stream_id)):
            if not isinstance(value, (int, np.integer)) or not 0 <= value <= _UINT64_MAX:
                raise ValueError(f"{name} must be an unsigned 64-bit integer")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def uniform(self) -> float:
        """Next uniform draw on [0, 1) with full 53-bit resolution."""
        return float(self._gen.random())

    def uniforms(self, n: int) -> np.ndarray:
        """Next ``n`` uniform draws as a float64 array."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        return self._gen.random(int(n))

    def fork(self, stream_id: int) -> "RandomSource":
        """Fresh stream with the same master seed and a new stream id."""
        return RandomSource(self.seed, stream_id)

    def __repr__(self):
        return f"RandomSource(seed={self.seed}, stream_id={self.stream_id})"
