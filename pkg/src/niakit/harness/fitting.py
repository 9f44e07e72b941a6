"""Fitting smoothing coefficients with a metaheuristic or the grid.

The swarm route spends a small fraction of the exhaustive grid's budget:
by default 1852 SSE evaluations, one fifth of the 21x21x21 = 9261-point
grid, and still lands within a few percent of the grid optimum because
the coefficient cube is small and smooth enough for ball scouting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algorithms.foa import FoaParams
from ..benchmarks.holtwinters import GRID_STEPS, HoltWintersParams, hw_fit_sse, hw_grid_oracle
from ..core.encoding import RealVector
from ..core.run import Budget, ObjectiveSense, Problem, run_optimizer
from ..errors import SchemaError

GRID_EVALUATIONS = GRID_STEPS ** 3
DEFAULT_FOA_EVALUATIONS = GRID_EVALUATIONS // 5  # 1852

#: coefficient-cube scouting defaults: wide first sweep, fast shrink
FOA_FIT_PARAMS = FoaParams(swarm_size=20, radius=0.5, decay=0.95)


@dataclass(frozen=True)
class HwFitResult:
    params: HoltWintersParams
    sse: float
    evaluations: int
    method: str


def hw_fit_problem(values, season_length: int) -> Problem:
    """SSE over the (alpha, beta, gamma) unit cube as a run problem."""
    y = np.asarray(values, dtype=float)

    def objective(x) -> float:
        a, b, g = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
        return hw_fit_sse(y, season_length, HoltWintersParams(float(a), float(b), float(g)))

    return Problem(
        objective=objective,
        encoding=RealVector.cube(3, 0.0, 1.0),
        sense=ObjectiveSense.MINIMIZE,
        name=f"hw-fit-m{season_length}",
    )


def fit_holtwinters(
    values,
    season_length: int,
    method: str = "foa",
    seed: int = 0,
    max_evaluations: int = DEFAULT_FOA_EVALUATIONS,
    foa_params: FoaParams | None = None,
) -> HwFitResult:
    """Fit (alpha, beta, gamma) by swarm search or exhaustive grid."""
    if method == "grid":
        params, sse, evals = hw_grid_oracle(values, season_length)
        return HwFitResult(params=params, sse=sse, evaluations=evals, method="grid")
    if method != "foa":
        raise SchemaError(f"unknown fitting method {method!r}; use 'foa' or 'grid'")
    if max_evaluations < 1:
        raise SchemaError(f"max_evaluations must be >= 1, got {max_evaluations}")
    problem = hw_fit_problem(values, season_length)
    budget = Budget(max_evaluations=max_evaluations)
    record = run_optimizer(
        problem, "foa", budget, seed, params=foa_params if foa_params is not None else FOA_FIT_PARAMS
    )
    a, b, g = (float(v) for v in np.clip(record.best, 0.0, 1.0))
    return HwFitResult(
        params=HoltWintersParams(a, b, g),
        sse=record.best_fitness,
        evaluations=record.evaluations,
        method="foa",
    )
