"""Experiment orchestration: CLI, batch running, timing benchmarks, and
metaheuristic parameter fitting."""

from .batch import BatchJob, run_batch, run_seeds
from .bench import (
    CSV_COLUMNS,
    ExperimentSpec,
    TimingReport,
    TimingRow,
    bench_ga_vs_dp,
    emit_report,
    fit_loglog_slope,
    parse_report,
)
from .fitting import (
    DEFAULT_FOA_EVALUATIONS,
    FOA_FIT_PARAMS,
    GRID_EVALUATIONS,
    HwFitResult,
    fit_holtwinters,
    hw_fit_problem,
)

__all__ = [
    "BatchJob",
    "CSV_COLUMNS",
    "DEFAULT_FOA_EVALUATIONS",
    "ExperimentSpec",
    "FOA_FIT_PARAMS",
    "GRID_EVALUATIONS",
    "HwFitResult",
    "TimingReport",
    "TimingRow",
    "bench_ga_vs_dp",
    "emit_report",
    "fit_holtwinters",
    "fit_loglog_slope",
    "hw_fit_problem",
    "parse_report",
    "run_batch",
    "run_seeds",
]
