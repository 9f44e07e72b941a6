"""Timing benchmarks: exact dynamic programming versus the GA.

Timing methodology: every timed cell runs once untimed as a warm-up,
then ``repetitions`` timed runs on a monotonic clock, and the report
keeps the median. Timed cells always execute serially; a module lock
enforces this even if callers orchestrate cells from multiple threads,
because concurrent timing would skew the comparison.

The GA runs on a fixed evaluation budget regardless of instance size, so
the growth of its wall time reflects per-evaluation cost only. The
comparison of log-log slopes against DP (whose table grows with n and
the capacity together) depends on that choice; callers who change the
budget per size are measuring something else.
"""

from __future__ import annotations

import csv
import json
import statistics
import threading
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from ..algorithms.ga import GaParams, ga_run
from ..benchmarks.knapsack import knapsack_dp, knapsack_problem, random_knapsack
from ..core.run import Budget
from ..errors import IoError, SchemaError

#: held around every timed run; timing cells must not overlap
TIMING_LOCK = threading.Lock()

CSV_COLUMNS = ("n", "algorithm", "median_ms", "best_value", "optimum", "ratio")


@dataclass(frozen=True)
class ExperimentSpec:
    """One benchmark sweep: a size list, per-cell repetitions, a seed."""

    sizes: tuple[int, ...]
    tightness: float = 0.5
    repetitions: int = 3
    seed: int = 0
    ga_budget: int = 50_000

    def __post_init__(self):
        if not self.sizes:
            raise SchemaError("sizes must be nonempty")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise SchemaError(f"sizes must be strictly increasing, got {self.sizes}")
        if any(n < 1 for n in self.sizes):
            raise SchemaError("sizes must be positive")
        if self.repetitions < 1:
            raise SchemaError(f"repetitions must be >= 1, got {self.repetitions}")
        if not 0 < self.tightness <= 1:
            raise SchemaError(f"tightness must be in (0, 1], got {self.tightness}")
        if self.ga_budget < 1:
            raise SchemaError(f"ga_budget must be >= 1, got {self.ga_budget}")


@dataclass(frozen=True)
class TimingRow:
    n: int
    capacity: int
    algorithm: str
    median_ms: float
    best_value: float
    optimum: float
    ratio: float


@dataclass(frozen=True)
class TimingReport:
    rows: tuple[TimingRow, ...]
    meta: dict = field(default_factory=dict)

    def rows_for(self, algorithm: str) -> list[TimingRow]:
        return [r for r in self.rows if r.algorithm == algorithm]

    def to_dict(self) -> dict:
        return {"meta": self.meta, "rows": [asdict(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "TimingReport":
        try:
            rows = tuple(TimingRow(**r) for r in d["rows"])
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed timing report ({exc})") from None
        return cls(rows=rows, meta=d.get("meta", {}))


def _timed_runs(fn, repetitions: int) -> tuple[float, object]:
    """Warm up once, then time ``repetitions`` runs; returns (median ms,
    last result)."""
    with TIMING_LOCK:
        result = fn()  # warm-up, untimed
        samples = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            result = fn()
            samples.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(samples), result


def fit_loglog_slope(sizes, times_ms) -> float:
    """Least-squares slope of log10(time) against log10(size)."""
    xs = np.log10(np.asarray(sizes, dtype=float))
    ys = np.log10(np.asarray(times_ms, dtype=float))
    if xs.size < 2:
        raise SchemaError("slope needs at least two points")
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def bench_ga_vs_dp(
    sizes,
    tightness: float = 0.5,
    repetitions: int = 3,
    seed: int = 0,
    ga_budget: int = 50_000,
    ga_params: GaParams | None = None,
) -> TimingReport:
    """Time exact DP and the budgeted GA across instance sizes.

    Each size n gets one generated instance (seed offset by n so sizes
    differ); DP provides the exact optimum, so every row carries a value
    ratio in [0, 1] with DP's own ratio exactly 1. With at least two
    sizes the report's meta carries the fitted log-log slopes.
    """
    spec = ExperimentSpec(
        sizes=tuple(int(n) for n in sizes),
        tightness=tightness,
        repetitions=repetitions,
        seed=seed,
        ga_budget=ga_budget,
    )
    params = ga_params if ga_params is not None else GaParams()
    rows: list[TimingRow] = []
    for n in spec.sizes:
        inst = random_knapsack(n, spec.tightness, spec.seed + n)

        dp_ms, (dp_value, _) = _timed_runs(lambda: knapsack_dp(inst), spec.repetitions)
        rows.append(
            TimingRow(
                n=n,
                capacity=inst.capacity,
                algorithm="dp",
                median_ms=dp_ms,
                best_value=float(dp_value),
                optimum=float(dp_value),
                ratio=1.0,
            )
        )

        problem = knapsack_problem(inst)
        budget = Budget(max_evaluations=spec.ga_budget)
        ga_ms, record = _timed_runs(lambda: ga_run(problem, params, budget, spec.seed), spec.repetitions)
        rows.append(
            TimingRow(
                n=n,
                capacity=inst.capacity,
                algorithm="ga",
                median_ms=ga_ms,
                best_value=record.best_fitness,
                optimum=float(dp_value),
                ratio=record.best_fitness / dp_value,
            )
        )

    meta = {
        "tightness": spec.tightness,
        "repetitions": spec.repetitions,
        "seed": spec.seed,
        "ga_budget": spec.ga_budget,
    }
    if len(spec.sizes) >= 2:
        meta["slope_dp"] = fit_loglog_slope(spec.sizes, [r.median_ms for r in rows if r.algorithm == "dp"])
        meta["slope_ga"] = fit_loglog_slope(spec.sizes, [r.median_ms for r in rows if r.algorithm == "ga"])
    return TimingReport(rows=tuple(rows), meta=meta)


# -- report emission ------------------------------------------------------


def emit_report(report: TimingReport, fmt: str, path: str):
    """Write a report as CSV (stable documented columns) or canonical
    JSON. JSON emission round-trips byte for byte through parse_report."""
    if not report.rows:
        raise SchemaError("refusing to emit an empty report")
    try:
        if fmt == "csv":
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(CSV_COLUMNS)
                for r in report.rows:
                    writer.writerow(
                        [r.n, r.algorithm, repr(r.median_ms), repr(r.best_value), repr(r.optimum), repr(r.ratio)]
                    )
        elif fmt == "json":
            with open(path, "w") as fh:
                fh.write(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
        else:
            raise SchemaError(f"unknown report format {fmt!r}; use 'csv' or 'json'")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from None


def parse_report(path: str) -> TimingReport:
    """Read back a JSON report emitted by emit_report."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    return TimingReport.from_dict(doc)
