"""Continuous test functions and their boxed problems."""

import numpy as np
import pytest

from niakit.benchmarks.functions import (
    FUNCTIONS,
    continuous_problem,
    onemax_problem,
    rastrigin,
    rosenbrock,
    sphere,
)
from niakit.errors import OutOfBounds, SchemaError


def test_global_optima():
    assert sphere(np.zeros(5)) == 0.0
    assert rastrigin(np.zeros(5)) == 0.0
    assert rosenbrock(np.ones(4)) == 0.0


def test_known_values():
    assert sphere([3.0, 4.0]) == 25.0
    assert abs(rastrigin([0.5, 0.5]) - (20.5 + 20.0)) < 1e-12
    assert rosenbrock([0.0, 0.0]) == 1.0


def test_rosenbrock_needs_two_dims():
    with pytest.raises(SchemaError):
        rosenbrock([1.0])


def test_function_table_carries_boxes():
    for name, (fn, (lo, hi)) in FUNCTIONS.items():
        assert lo < 0 < hi
        assert fn(np.zeros(2) + (1.0 if name == "rosenbrock" else 0.0)) == 0.0


def test_boxed_problem_rejects_outside_points():
    problem = continuous_problem("sphere", 2)
    assert problem.objective([1.0, 1.0]) == 2.0
    with pytest.raises(OutOfBounds):
        problem.objective([6.0, 0.0])
    relaxed = continuous_problem("sphere", 2, check_bounds=False)
    assert relaxed.objective([6.0, 0.0]) == 36.0


def test_unknown_function_rejected():
    with pytest.raises(SchemaError):
        continuous_problem("ackley", 2)


def test_onemax_counts_ones():
    problem = onemax_problem(6)
    assert problem.objective([1, 0, 1, 1, 0, 1]) == 4.0
    assert problem.sense == "maximize"
