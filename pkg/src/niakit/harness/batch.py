"""Running many independent optimizer runs, optionally concurrently.

Each run owns its RNG stream and its record; nothing mutable is shared.
Objectives are only called from several threads at once when the caller
passes ``parallel_objectives=True``, declaring them safe for that; the
default executes one run at a time. Results always come back in job
order, so batch output is independent of scheduling."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from ..core.run import Budget, Problem, RunRecord, run_optimizer


@dataclass(frozen=True)
class BatchJob:
    problem: Problem
    algorithm: str
    budget: Budget
    seed: int
    params: Any = None


def run_batch(
    jobs: list[BatchJob],
    parallel_objectives: bool = False,
    max_workers: int | None = None,
) -> list[RunRecord]:
    if not parallel_objectives:
        return [run_optimizer(j.problem, j.algorithm, j.budget, j.seed, j.params) for j in jobs]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = [
            pool.submit(run_optimizer, j.problem, j.algorithm, j.budget, j.seed, j.params) for j in jobs
        ]
        return [f.result() for f in futures]


def run_seeds(
    problem: Problem,
    algorithm: str,
    budget: Budget,
    seeds,
    params: Any = None,
    parallel_objectives: bool = False,
    max_workers: int | None = None,
) -> list[RunRecord]:
    """One problem, many seeds; a convenience over run_batch."""
    jobs = [BatchJob(problem, algorithm, budget, int(s), params) for s in seeds]
    return run_batch(jobs, parallel_objectives=parallel_objectives, max_workers=max_workers)
