"""Fruit fly optimization over box-bounded real vectors.

A swarm repeatedly scouts random points inside a ball around its
current center; whenever a scout smells better than the center, the
center jumps there. The ball radius shrinks geometrically, so the
search sweeps from exploration to fine local refinement.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..core.encoding import RealVector
from ..core.rng import SOLVER_STREAM, rng_stream
from ..core.run import Budget, BudgetExhausted, Problem, RunRecord, RunTracker
from ..core.run import is_improvement
from ..errors import EncodingMismatch, SchemaError


@dataclass(frozen=True)
class FoaParams:
    swarm_size: int = 20
    radius: float | None = None  # None -> radius_scale * widest coordinate range
    radius_scale: float = 0.1
    decay: float = 0.99  # radius factor per iteration
    initial_point: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.swarm_size < 1:
            raise SchemaError(f"swarm_size must be >= 1, got {self.swarm_size}")
        if self.radius is not None and self.radius <= 0:
            raise SchemaError(f"radius must be positive, got {self.radius}")
        if self.radius_scale <= 0:
            raise SchemaError(f"radius_scale must be positive, got {self.radius_scale}")
        if not 0.0 < self.decay <= 1.0:
            raise SchemaError(f"decay must lie in (0, 1], got {self.decay}")


def sample_ball(rng: np.random.Generator, center: np.ndarray, radius: float) -> np.ndarray:
    """Uniform point in the d-ball: random direction, radius scaled by
    u^(1/d)."""
    d = center.size
    direction = rng.normal(size=d)
    norm = float(np.linalg.norm(direction))
    if norm == 0.0:
        return center.copy()
    r = radius * float(rng.random()) ** (1.0 / d)
    return center + (r / norm) * direction


def foa_run(problem: Problem, params: FoaParams, budget: Budget, seed: int) -> RunRecord:
    encoding = problem.encoding
    if not isinstance(encoding, RealVector):
        raise EncodingMismatch(f"foa supports RealVector, got {type(encoding).__name__}")
    rng = rng_stream(seed, SOLVER_STREAM)
    tracker = RunTracker(problem, budget)
    lower, upper = encoding.lower, encoding.upper
    radius0 = params.radius if params.radius is not None else params.radius_scale * float(
        np.max(upper - lower)
    )

    if params.initial_point is not None:
        center = np.asarray(params.initial_point, dtype=float)
        encoding.validate(center)
    else:
        center = encoding.sample(rng)

    try:
        center_fitness = tracker.evaluate(center)
        k = 0
        while tracker.start_iteration():
            radius = radius0 * params.decay ** k
            k += 1
            for _ in range(params.swarm_size):
                scout = np.clip(sample_ball(rng, center, radius), lower, upper)
                fitness = tracker.evaluate(scout)
                if is_improvement(fitness, center_fitness, problem.sense):
                    center = scout
                    center_fitness = fitness
    except BudgetExhausted:
        pass
    return tracker.finalize("foa", asdict(params), seed)
