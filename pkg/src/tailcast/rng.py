"""Deterministic RNG stream derivation.

Every stochastic operation in the package draws from a Generator derived
from (seed, *path) via numpy's SeedSequence spawn keys.  Units of work
(bootstrap resamples, CV folds, forecast simulations) each get their own
stream keyed by index, so results do not depend on evaluation order or on
how the work is parallelized.
"""

from __future__ import annotations

import numpy as np

__all__ = ["substream"]


def substream(seed: int, *path: int) -> np.random.Generator:
    """Generator for the stream identified by (seed, *path).

    The same arguments always yield an identical stream; distinct paths
    yield independent streams.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(path)))
