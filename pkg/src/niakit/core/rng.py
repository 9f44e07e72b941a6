"""Deterministic, splittable random streams.

All randomness in the toolkit flows through `rng_stream`, which builds a
numpy Generator on the counter-based Philox-4x64 bit generator keyed by
``(seed, stream_id)``. The construction is platform independent: equal
key pairs reproduce the identical sequence on any machine, and distinct
stream ids give statistically independent streams without coordination.

Stream-id convention used by the toolkit (callers may use any ids they
like for their own draws):

* 0: solver runs (one stream per run, keyed by the run seed)
* 1: instance/series generators
"""

from __future__ import annotations

import numpy as np

SOLVER_STREAM = 0
INSTANCE_STREAM = 1


def rng_stream(seed: int, stream_id: int = 0) -> np.random.Generator:
    """Return the deterministic random stream for ``(seed, stream_id)``."""
    if seed < 0 or stream_id < 0:
        raise ValueError("seed and stream_id must be non-negative")
    key = np.array([seed, stream_id], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
