"""Run control shared by all solvers: budgets, records, and the driver.

A single optimizer run is sequential and single-threaded. The
`RunTracker` wraps the user objective and enforces every run-level
contract in one place:

* evaluation counting with a hard stop at ``max_evaluations`` (solvers
  never overshoot the cap, not even by one batch),
* best-so-far tracking with strict improvement only, so ties are broken
  by earlier discovery and the history is monotone,
* non-finite objective values (NaN, +/-inf) mapped to worst-possible
  fitness and counted in the record,
* wall-time and target-fitness limits.

Rerunning a solver with identical problem, params, budget, and seed
reproduces the identical record except for wall time.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from ..errors import EncodingMismatch, InvalidBudget
from .encoding import Encoding, to_plain


class ObjectiveSense:
    """Direction of optimization; comparisons flip consistently with it."""

    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


def worst_fitness(sense: str) -> float:
    return math.inf if sense == ObjectiveSense.MINIMIZE else -math.inf


def is_improvement(new: float, incumbent: float, sense: str) -> bool:
    """Strictly better under the sense; NaN never improves."""
    if math.isnan(new):
        return False
    if sense == ObjectiveSense.MINIMIZE:
        return new < incumbent
    return new > incumbent


@dataclass
class Budget:
    """Stopping limits; the run halts as soon as ANY set limit is reached.

    At least one of max_evaluations / max_iterations must be set.
    ``max_wall_time`` is in seconds. ``target_fitness`` stops the run once
    the best-so-far is at least as good as the target under the sense.
    """

    max_evaluations: int | None = None
    max_iterations: int | None = None
    target_fitness: float | None = None
    max_wall_time: float | None = None

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.max_evaluations is None and self.max_iterations is None:
            raise InvalidBudget("set at least one of max_evaluations / max_iterations")
        for name in ("max_evaluations", "max_iterations"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise InvalidBudget(f"{name} must be >= 1 when set, got {v}")
        if self.max_wall_time is not None and self.max_wall_time <= 0:
            raise InvalidBudget(f"max_wall_time must be > 0 when set, got {self.max_wall_time}")

    def to_dict(self) -> dict:
        return {
            "max_evaluations": self.max_evaluations,
            "max_iterations": self.max_iterations,
            "target_fitness": self.target_fitness,
            "max_wall_time": self.max_wall_time,
        }


def _json_float(x: float):
    # json.dumps cannot carry non-finite numbers in strict mode
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _unjson_float(x) -> float:
    return float(x) if not isinstance(x, str) else float(x)


@dataclass
class RunRecord:
    """Full reproducible trace of one optimizer run.

    ``history`` holds (evaluation count, best-so-far fitness) pairs, one
    per strict improvement; it is monotone non-increasing for minimize
    and non-decreasing for maximize. ``nonfinite_evaluations`` counts
    objective values that were NaN or infinite and were therefore mapped
    to worst-possible fitness.
    """

    algorithm: str
    config: dict
    seed: int
    best: Any
    best_fitness: float
    evaluations: int
    iterations: int
    wall_time_ms: float
    history: list[tuple[int, float]] = field(default_factory=list)
    sense: str = ObjectiveSense.MINIMIZE
    nonfinite_evaluations: int = 0

    def to_dict(self) -> dict:
        """JSON document schema:

        algorithm (str), seed (int), config (object), sense (str),
        best (array), best_fitness (number or "inf"/"-inf"/"nan"),
        evaluations (int), iterations (int), wall_time_ms (number),
        history (array of [evals, fitness] pairs),
        nonfinite_evaluations (int).
        """
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "config": self.config,
            "sense": self.sense,
            "best": self.best,
            "best_fitness": _json_float(self.best_fitness),
            "evaluations": self.evaluations,
            "iterations": self.iterations,
            "wall_time_ms": self.wall_time_ms,
            "history": [[e, _json_float(f)] for e, f in self.history],
            "nonfinite_evaluations": self.nonfinite_evaluations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        return cls(
            algorithm=d["algorithm"],
            config=d["config"],
            seed=d["seed"],
            best=d["best"],
            best_fitness=_unjson_float(d["best_fitness"]),
            evaluations=d["evaluations"],
            iterations=d["iterations"],
            wall_time_ms=d["wall_time_ms"],
            history=[(e, _unjson_float(f)) for e, f in d["history"]],
            sense=d.get("sense", ObjectiveSense.MINIMIZE),
            nonfinite_evaluations=d.get("nonfinite_evaluations", 0),
        )

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls.from_dict(json.loads(text))

    def reproducibility_key(self) -> bytes:
        """Canonical bytes of everything determinism covers (no wall time)."""
        d = self.to_dict()
        d.pop("wall_time_ms")
        return json.dumps(d, sort_keys=True).encode()

    def history_is_monotone(self) -> bool:
        pairs = zip(self.history, self.history[1:])
        if self.sense == ObjectiveSense.MINIMIZE:
            return all(b[1] <= a[1] for a, b in pairs)
        return all(b[1] >= a[1] for a, b in pairs)


@dataclass
class Problem:
    """An objective over an encoding, plus the optimization sense.

    ``data`` optionally carries problem structure a solver may exploit
    (e.g. the city coordinates behind a permutation objective). Objective
    functions must be pure: no side effects observable by solvers, and
    identical values for identical inputs.
    """

    objective: Callable[[Any], float]
    encoding: Encoding
    sense: str = ObjectiveSense.MINIMIZE
    name: str = ""
    data: Any = None


class BudgetExhausted(Exception):
    """Internal control flow: unwinds a solver loop when a limit is hit."""


class RunTracker:
    """Budget enforcement, best-so-far tracking, and record assembly."""

    def __init__(self, problem: Problem, budget: Budget):
        budget.validate()
        self.problem = problem
        self.budget = budget
        self.sense = problem.sense
        self.evaluations = 0
        self.iterations = 0
        self.nonfinite = 0
        self.best_fitness = worst_fitness(self.sense)
        self.best_value: Any = None
        self.history: list[tuple[int, float]] = []
        self._t0 = time.perf_counter()

    # -- limits ---------------------------------------------------------

    def _wall_exceeded(self) -> bool:
        limit = self.budget.max_wall_time
        return limit is not None and (time.perf_counter() - self._t0) >= limit

    def _target_reached(self) -> bool:
        target = self.budget.target_fitness
        if target is None or self.best_value is None:
            return False
        if self.sense == ObjectiveSense.MINIMIZE:
            return self.best_fitness <= target
        return self.best_fitness >= target

    def start_iteration(self) -> bool:
        """Begin the next solver iteration; False when the run must stop."""
        if self.budget.max_iterations is not None and self.iterations >= self.budget.max_iterations:
            return False
        if self.budget.max_evaluations is not None and self.evaluations >= self.budget.max_evaluations:
            return False
        if self._target_reached() or self._wall_exceeded():
            return False
        self.iterations += 1
        return True

    # -- evaluation -----------------------------------------------------

    def evaluate(self, value) -> float:
        """Evaluate one candidate through the budgeted objective.

        Raises BudgetExhausted the moment a limit is hit, so no solver can
        exceed ``max_evaluations`` (overshoot granule: zero).
        """
        if self.budget.max_evaluations is not None and self.evaluations >= self.budget.max_evaluations:
            raise BudgetExhausted
        raw = float(self.problem.objective(value))
        self.evaluations += 1
        if not math.isfinite(raw):
            self.nonfinite += 1
            fitness = worst_fitness(self.sense)
        else:
            fitness = raw
        if self.best_value is None or is_improvement(fitness, self.best_fitness, self.sense):
            self.best_fitness = fitness
            self.best_value = to_plain(value)
            self.history.append((self.evaluations, fitness))
            if self._target_reached():
                raise BudgetExhausted
        if self._wall_exceeded():
            raise BudgetExhausted
        return fitness

    def evaluate_batch(self, values) -> list[float]:
        return [self.evaluate(v) for v in values]

    # -- assembly -------------------------------------------------------

    def finalize(self, algorithm: str, config: dict, seed: int) -> RunRecord:
        wall_ms = (time.perf_counter() - self._t0) * 1000.0
        return RunRecord(
            algorithm=algorithm,
            config=config,
            seed=seed,
            best=self.best_value,
            best_fitness=self.best_fitness,
            evaluations=self.evaluations,
            iterations=self.iterations,
            wall_time_ms=wall_ms,
            history=list(self.history),
            sense=self.sense,
            nonfinite_evaluations=self.nonfinite,
        )


# -- uniform driver -----------------------------------------------------

#: name -> (run function, supported encoding kinds, default params factory)
SOLVERS: dict[str, tuple[Callable, tuple[type, ...], Callable[[], Any]]] = {}


def register_solver(name: str, run_fn: Callable, encodings: tuple[type, ...], default_params: Callable[[], Any]):
    SOLVERS[name] = (run_fn, encodings, default_params)


def run_optimizer(problem: Problem, algorithm: str, budget: Budget, seed: int, params=None) -> RunRecord:
    """Run a registered solver on a problem under a budget.

    Rerunning with identical arguments yields an identical RunRecord
    except for wall time.
    """
    from .. import algorithms as _algorithms  # noqa: F401  (registers solvers)

    if algorithm not in SOLVERS:
        raise KeyError(f"unknown algorithm {algorithm!r}; known: {sorted(SOLVERS)}")
    run_fn, encodings, default_params = SOLVERS[algorithm]
    if not isinstance(problem.encoding, encodings):
        names = ", ".join(e.__name__ for e in encodings)
        raise EncodingMismatch(
            f"{algorithm} supports encodings ({names}), got {type(problem.encoding).__name__}"
        )
    budget.validate()
    if params is None:
        params = default_params()
    return run_fn(problem, params, budget, seed)
