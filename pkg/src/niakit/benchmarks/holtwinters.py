"""Multiplicative triple exponential smoothing (level, trend, season).

The smoothing recurrences over a series y with season length m are

    level[t]  = alpha * y[t] / season[t-m] + (1-alpha) * (level[t-1] + trend[t-1])
    trend[t]  = beta * (level[t] - level[t-1]) + (1-beta) * trend[t-1]
    season[t] = gamma * y[t] / level[t] + (1-gamma) * season[t-m]

initialized from the first two full seasons:

    level  = mean of season one
    trend  = (mean of season two - mean of season one) / m
    season[i] = y[i] / mean of season one        for i < m

The one-step-ahead forecast for t is (level[t-1] + trend[t-1]) *
season[t-m]; the fitting error (SSE) sums squared one-step errors for
t >= 2m only, so the burn-in season that still leans on the raw initial
indices does not count.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass

import numpy as np

from ..core.rng import INSTANCE_STREAM, rng_stream
from ..errors import NonPositiveSeries, SchemaError, TooShortSeries


@dataclass(frozen=True)
class HoltWintersParams:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise SchemaError(f"{name} must lie in [0, 1], got {v}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


def validate_series(values, season_length: int) -> np.ndarray:
    y = np.asarray(values, dtype=float)
    if season_length < 2:
        raise SchemaError(f"season_length must be >= 2, got {season_length}")
    if y.ndim != 1:
        raise SchemaError(f"series must be one-dimensional, got shape {y.shape}")
    if y.size < 2 * season_length:
        raise TooShortSeries(
            f"need at least two full seasons ({2 * season_length} points), got {y.size}"
        )
    if not np.all(np.isfinite(y)) or np.any(y <= 0):
        raise NonPositiveSeries("multiplicative smoothing needs strictly positive finite values")
    return y


@dataclass
class SmoothingResult:
    level: float
    trend: float
    season: np.ndarray  # season[t] for every t, initial indices in [0, m)
    fitted: np.ndarray  # one-step-ahead forecasts for t in [m, N)
    sse: float          # squared one-step errors summed over t >= 2m


def hw_smooth(values, season_length: int, params: HoltWintersParams) -> SmoothingResult:
    """Run the recurrences across the series; returns inf SSE (with NaN
    components) when the level collapses to zero or below, which can
    happen for unlucky parameter mixes on trending series."""
    y = validate_series(values, season_length)
    m = season_length
    n = y.size
    a, b, g = params.alpha, params.beta, params.gamma

    first = y[:m]
    second = y[m : 2 * m]
    base = float(first.mean())
    level = base
    trend = (float(second.mean()) - base) / m
    season = np.empty(n, dtype=float)
    season[:m] = first / base

    fitted = np.empty(n - m, dtype=float)
    sse = 0.0
    for t in range(m, n):
        s_prev = season[t - m]
        forecast = (level + trend) * s_prev
        fitted[t - m] = forecast
        if t >= 2 * m:
            err = y[t] - forecast
            sse += err * err
        new_level = a * y[t] / s_prev + (1.0 - a) * (level + trend)
        if new_level <= 0.0 or not math.isfinite(new_level):
            season[t:] = np.nan
            fitted[t - m + 1 :] = np.nan
            return SmoothingResult(math.nan, math.nan, season, fitted, math.inf)
        trend = b * (new_level - level) + (1.0 - b) * trend
        level = new_level
        season[t] = g * y[t] / level + (1.0 - g) * s_prev
    return SmoothingResult(float(level), float(trend), season, fitted, float(sse))


def hw_fit_sse(values, season_length: int, params: HoltWintersParams) -> float:
    """Sum of squared one-step-ahead errors for t >= 2m; the fitting
    objective. Requires more than two seasons so at least one error term
    exists."""
    y = np.asarray(values, dtype=float)
    if y.size <= 2 * season_length:
        raise TooShortSeries(
            f"fitting needs more than two seasons ({2 * season_length + 1}+ points), got {y.size}"
        )
    return hw_smooth(y, season_length, params).sse


def hw_forecast(values, season_length: int, params: HoltWintersParams, horizon: int) -> np.ndarray:
    """Forecast ``horizon`` steps past the series end: (level + h*trend)
    times the latest seasonal index for that phase."""
    if horizon < 1:
        raise SchemaError(f"horizon must be >= 1, got {horizon}")
    res = hw_smooth(values, season_length, params)
    if not math.isfinite(res.sse):
        raise NonPositiveSeries("smoothing collapsed; cannot forecast with these parameters")
    n = len(res.season)
    m = season_length
    out = np.empty(horizon, dtype=float)
    for h in range(1, horizon + 1):
        idx = n - m + ((h - 1) % m)
        out[h - 1] = (res.level + h * res.trend) * res.season[idx]
    return out


GRID_STEPS = 21  # {0.00, 0.05, ..., 1.00} per coefficient


def hw_grid_oracle(values, season_length: int, steps: int = GRID_STEPS) -> tuple[HoltWintersParams, float, int]:
    """Exhaustive parameter search on a uniform grid over [0, 1]^3.

    Returns (best params, best SSE, number of SSE evaluations). The grid
    is scanned in lexicographic (alpha, beta, gamma) order and only
    strict improvements are kept, so ties resolve to the smallest tuple.
    """
    if steps < 2:
        raise SchemaError(f"steps must be >= 2, got {steps}")
    grid = np.linspace(0.0, 1.0, steps)
    best: HoltWintersParams | None = None
    best_sse = math.inf
    evals = 0
    for a in grid:
        for b in grid:
            for g in grid:
                p = HoltWintersParams(float(a), float(b), float(g))
                sse = hw_fit_sse(values, season_length, p)
                evals += 1
                if sse < best_sse:
                    best_sse = sse
                    best = p
    assert best is not None
    return best, best_sse, evals


# -- synthetic data and I/O ----------------------------------------------


def synthetic_seasonal_series(
    season_length: int = 12,
    seasons: int = 10,
    seed: int = 0,
    base: float = 100.0,
    trend: float = 0.5,
    amplitude: float = 0.3,
    noise: float = 0.02,
) -> np.ndarray:
    """Positive series with linear trend times a sinusoidal seasonal
    profile times mild lognormal noise."""
    if seasons < 2:
        raise SchemaError(f"need at least 2 seasons, got {seasons}")
    rng = rng_stream(seed, INSTANCE_STREAM)
    n = season_length * seasons
    t = np.arange(n)
    profile = 1.0 + amplitude * np.sin(2.0 * np.pi * t / season_length)
    wobble = np.exp(rng.normal(0.0, noise, size=n))
    y = (base + trend * t) * profile * wobble
    return y


def _sidecar_path(path: str) -> str:
    return path + ".meta.json"


def write_series_csv(path: str, values, season_length: int | None = None):
    """CSV with a ``t,y`` header and 0-based time index; the season
    length goes to a ``<path>.meta.json`` sidecar when given."""
    y = np.asarray(values, dtype=float)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "y"])
        for t, v in enumerate(y):
            writer.writerow([t, repr(float(v))])
    if season_length is not None:
        with open(_sidecar_path(path), "w") as fh:
            json.dump({"season_length": season_length}, fh)
            fh.write("\n")


def read_series_csv(path: str) -> tuple[np.ndarray, int | None]:
    """Read a ``t,y`` CSV; returns (values, season length or None when
    no sidecar exists). Rows are taken in file order."""
    values: list[float] = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().lower() == "t":
                continue
            if len(row) < 2:
                raise SchemaError(f"{path}: expected 't,y' rows, got {row!r}")
            try:
                values.append(float(row[1]))
            except ValueError:
                raise SchemaError(f"{path}: non-numeric row {row!r}") from None
    season_length = None
    sidecar = _sidecar_path(path)
    if os.path.exists(sidecar):
        with open(sidecar) as fh:
            meta = json.load(fh)
        season_length = int(meta["season_length"])
    return np.array(values, dtype=float), season_length
