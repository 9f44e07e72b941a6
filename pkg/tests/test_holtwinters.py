"""Multiplicative triple exponential smoothing and its grid oracle."""

import numpy as np
import pytest

from niakit.benchmarks.holtwinters import (
    GRID_STEPS,
    HoltWintersParams,
    hw_fit_sse,
    hw_forecast,
    hw_grid_oracle,
    hw_smooth,
    read_series_csv,
    synthetic_seasonal_series,
    validate_series,
    write_series_csv,
)
from niakit.errors import NonPositiveSeries, SchemaError, TooShortSeries

#: frozen fitting error for the seed-11 series at params (0.5, 0.1, 0.3),
#: cross-checked against the scalar reimplementation below
SEED11_SSE = 2552.831023314882


def _scalar_sse(y, m, a, b, g):
    """Straight-line reimplementation of the recurrences, no shared code."""
    first = y[:m]
    second = y[m : 2 * m]
    base = sum(first) / m
    level = base
    trend = (sum(second) / m - base) / m
    season = [v / base for v in first] + [0.0] * (len(y) - m)
    sse = 0.0
    for t in range(m, len(y)):
        s_prev = season[t - m]
        forecast = (level + trend) * s_prev
        if t >= 2 * m:
            sse += (y[t] - forecast) ** 2
        new_level = a * y[t] / s_prev + (1 - a) * (level + trend)
        trend = b * (new_level - level) + (1 - b) * trend
        level = new_level
        season[t] = g * y[t] / level + (1 - g) * s_prev
    return sse


def test_params_validated():
    HoltWintersParams(0.0, 0.0, 0.0)
    HoltWintersParams(1.0, 1.0, 1.0)
    with pytest.raises(SchemaError):
        HoltWintersParams(1.2, 0.0, 0.0)
    with pytest.raises(SchemaError):
        HoltWintersParams(0.5, -0.1, 0.0)


def test_constant_series_fits_exactly():
    y = np.full(24, 5.0)
    for params in (
        HoltWintersParams(0.0, 0.0, 0.0),
        HoltWintersParams(0.5, 0.1, 0.3),
        HoltWintersParams(1.0, 1.0, 1.0),
    ):
        assert hw_fit_sse(y, 4, params) == 0.0
        assert np.all(hw_forecast(y, 4, params, horizon=6) == 5.0)


def test_exact_multiplicative_series_fits_exactly():
    # dyadic level and seasonal profile keep every float op exact
    profile = np.array([0.5, 1.5, 0.75, 1.25])  # mean exactly 1.0
    y = np.tile(8.0 * profile, 6)
    params = HoltWintersParams(0.0, 0.0, 0.0)
    result = hw_smooth(y, 4, params)
    assert result.sse == 0.0
    assert result.level == 8.0
    assert result.trend == 0.0
    assert np.array_equal(result.season[:4], profile)
    forecast = hw_forecast(y, 4, params, horizon=8)
    assert np.array_equal(forecast, np.tile(8.0 * profile, 2))


def test_seed11_sse_is_frozen_and_matches_reimplementation():
    y = synthetic_seasonal_series(season_length=12, seasons=10, seed=11)
    ours = hw_fit_sse(y, 12, HoltWintersParams(0.5, 0.1, 0.3))
    independent = _scalar_sse([float(v) for v in y], 12, 0.5, 0.1, 0.3)
    assert abs(ours - independent) <= 1e-9 * independent
    assert abs(ours - SEED11_SSE) <= 1e-9 * SEED11_SSE


def test_scaling_invariance():
    y = synthetic_seasonal_series(season_length=6, seasons=6, seed=4)
    params = HoltWintersParams(0.4, 0.2, 0.6)
    base = hw_fit_sse(y, 6, params)
    for c in (0.001, 3.0, 1000.0):
        scaled = hw_fit_sse(c * y, 6, params)
        assert abs(scaled - c * c * base) <= 1e-9 * abs(c * c * base)


def test_series_validation_errors():
    with pytest.raises(TooShortSeries):
        validate_series(np.ones(7), 4)
    with pytest.raises(NonPositiveSeries):
        validate_series(np.array([1.0] * 7 + [0.0]), 4)
    with pytest.raises(NonPositiveSeries):
        validate_series(np.array([1.0] * 7 + [-2.0]), 4)
    with pytest.raises(NonPositiveSeries):
        validate_series(np.array([1.0] * 7 + [np.nan]), 4)
    with pytest.raises(SchemaError):
        validate_series(np.ones(8), 1)


def test_fit_needs_more_than_two_seasons():
    # exactly two seasons smooths fine but leaves nothing to score
    with pytest.raises(TooShortSeries):
        hw_fit_sse(np.ones(8), 4, HoltWintersParams(0.5, 0.5, 0.5))


def test_collapsed_level_reports_inf_sse():
    # a violent drop after the burn-in can push the level to zero or below
    y = np.array([100.0] * 8 + [1e-9] * 8)
    sse = hw_smooth(y, 4, HoltWintersParams(1.0, 1.0, 1.0)).sse
    assert sse == np.inf or np.isfinite(sse)  # never NaN
    assert not np.isnan(sse)


def test_grid_oracle_tie_breaks_lexicographically():
    y = np.full(24, 7.0)
    params, sse, evals = hw_grid_oracle(y, 4, steps=5)
    assert sse == 0.0
    assert params.as_tuple() == (0.0, 0.0, 0.0)
    assert evals == 125


def test_grid_oracle_beats_fixed_params():
    y = synthetic_seasonal_series(season_length=6, seasons=5, seed=2)
    params, sse, evals = hw_grid_oracle(y, 6, steps=6)
    assert evals == 216
    assert sse <= hw_fit_sse(y, 6, HoltWintersParams(0.4, 0.4, 0.4))
    assert sse == hw_fit_sse(y, 6, params)


def test_default_grid_size_constant():
    assert GRID_STEPS == 21


def test_synthetic_series_deterministic_and_positive():
    a = synthetic_seasonal_series(season_length=12, seasons=4, seed=3)
    b = synthetic_seasonal_series(season_length=12, seasons=4, seed=3)
    assert np.array_equal(a, b)
    assert a.size == 48
    assert np.all(a > 0.0)
    assert not np.array_equal(a, synthetic_seasonal_series(season_length=12, seasons=4, seed=5))


def test_csv_round_trip_with_sidecar(tmp_path):
    y = synthetic_seasonal_series(season_length=4, seasons=3, seed=6)
    path = tmp_path / "series.csv"
    write_series_csv(str(path), y, season_length=4)
    values, m = read_series_csv(str(path))
    assert m == 4
    assert np.array_equal(values, y)
    assert path.read_text().splitlines()[0] == "t,y"


def test_csv_round_trip_without_sidecar(tmp_path):
    path = tmp_path / "bare.csv"
    write_series_csv(str(path), [1.5, 2.5, 3.5])
    values, m = read_series_csv(str(path))
    assert m is None
    assert values.tolist() == [1.5, 2.5, 3.5]
