"""Bat algorithm over box-bounded real vectors.

Each bat carries a position, a velocity, a loudness, and a pulse
emission rate. Velocities pull bats toward the best known position at a
randomized frequency; quiet bats with rare pulses instead take a local
random walk around the best, scaled by the swarm's mean loudness. A
candidate replaces the bat's position only when it improves on it and a
loudness-gated coin accepts; every acceptance turns the bat's loudness
down and its pulse rate up, shifting the swarm from global moves to
local polishing.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..core.encoding import RealVector
from ..core.rng import SOLVER_STREAM, rng_stream
from ..core.run import (
    Budget,
    BudgetExhausted,
    ObjectiveSense,
    Problem,
    RunRecord,
    RunTracker,
    is_improvement,
)
from ..errors import EncodingMismatch, SchemaError


@dataclass(frozen=True)
class BaParams:
    population_size: int = 30
    f_min: float = 0.0
    f_max: float = 2.0
    loudness: float = 0.9  # initial loudness A0
    pulse_rate: float = 0.5  # asymptotic pulse rate r0
    alpha: float = 0.97  # loudness decay per acceptance
    gamma: float = 0.1  # pulse-rate ramp per acceptance
    local_step: float = 0.1  # walk scale as a fraction of each range
    initial_positions: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self):
        if self.population_size < 1:
            raise SchemaError(f"population_size must be >= 1, got {self.population_size}")
        if self.f_max < self.f_min:
            raise SchemaError("f_max must be >= f_min")
        if not 0.0 < self.loudness <= 1.0:
            raise SchemaError(f"loudness must lie in (0, 1], got {self.loudness}")
        if not 0.0 <= self.pulse_rate <= 1.0:
            raise SchemaError(f"pulse_rate must lie in [0, 1], got {self.pulse_rate}")
        if not 0.0 < self.alpha < 1.0:
            raise SchemaError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.gamma <= 0:
            raise SchemaError(f"gamma must be positive, got {self.gamma}")
        if self.local_step <= 0:
            raise SchemaError(f"local_step must be positive, got {self.local_step}")


def ba_run(problem: Problem, params: BaParams, budget: Budget, seed: int) -> RunRecord:
    encoding = problem.encoding
    if not isinstance(encoding, RealVector):
        raise EncodingMismatch(f"ba supports RealVector, got {type(encoding).__name__}")
    rng = rng_stream(seed, SOLVER_STREAM)
    tracker = RunTracker(problem, budget)
    lower, upper = encoding.lower, encoding.upper
    width = upper - lower
    m = params.population_size

    if params.initial_positions is not None:
        positions = [np.asarray(p, dtype=float) for p in params.initial_positions]
        if len(positions) != m:
            raise SchemaError(f"expected {m} initial positions, got {len(positions)}")
        for p in positions:
            encoding.validate(p)
    else:
        positions = [encoding.sample(rng) for _ in range(m)]
    velocities = [np.zeros_like(positions[0]) for _ in range(m)]
    loudness = [params.loudness] * m
    pulse = [params.pulse_rate * (1.0 - math.exp(-params.gamma))] * m
    acceptances = [1] * m

    try:
        fitnesses = [tracker.evaluate(p) for p in positions]
        if problem.sense == ObjectiveSense.MINIMIZE:
            best_idx = min(range(m), key=lambda i: (fitnesses[i], i))
        else:
            best_idx = max(range(m), key=lambda i: (fitnesses[i], -i))
        best_pos = positions[best_idx].copy()
        best_fit = fitnesses[best_idx]

        while tracker.start_iteration():
            mean_loudness = sum(loudness) / m
            for i in range(m):
                beta = float(rng.random())
                freq = params.f_min + (params.f_max - params.f_min) * beta
                velocities[i] = velocities[i] + (best_pos - positions[i]) * freq
                candidate = np.clip(positions[i] + velocities[i], lower, upper)
                if rng.random() > pulse[i]:
                    walk = params.local_step * width * mean_loudness * rng.normal(size=width.size)
                    candidate = np.clip(best_pos + walk, lower, upper)
                fitness = tracker.evaluate(candidate)
                if is_improvement(fitness, fitnesses[i], problem.sense) and rng.random() < loudness[i]:
                    positions[i] = candidate
                    fitnesses[i] = fitness
                    acceptances[i] += 1
                    loudness[i] = params.loudness * params.alpha ** acceptances[i]
                    pulse[i] = params.pulse_rate * (1.0 - math.exp(-params.gamma * acceptances[i]))
                if is_improvement(fitness, best_fit, problem.sense):
                    best_fit = fitness
                    best_pos = candidate.copy()
    except BudgetExhausted:
        pass
    return tracker.finalize("ba", asdict(params), seed)
