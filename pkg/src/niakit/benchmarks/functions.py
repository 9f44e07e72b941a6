"""Continuous test functions and simple bitstring baselines."""

from __future__ import annotations

import numpy as np

from ..core.encoding import Bitstring, RealVector
from ..core.run import ObjectiveSense, Problem
from ..errors import OutOfBounds, SchemaError


def sphere(x) -> float:
    """Sum of squares; global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(np.dot(x, x))


def rastrigin(x) -> float:
    """Highly multimodal; global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def rosenbrock(x) -> float:
    """Curved valley; global minimum 0 at (1, ..., 1). Needs dim >= 2."""
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise SchemaError("rosenbrock needs at least 2 dimensions")
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


#: function name -> (callable, conventional per-coordinate box)
FUNCTIONS: dict[str, tuple] = {
    "sphere": (sphere, (-5.12, 5.12)),
    "rastrigin": (rastrigin, (-5.12, 5.12)),
    "rosenbrock": (rosenbrock, (-5.0, 10.0)),
}


def continuous_problem(name: str, dim: int, check_bounds: bool = True) -> Problem:
    """Minimization problem for a named test function on its usual box.

    With ``check_bounds`` the objective raises OutOfBounds for points
    outside the box instead of silently scoring them.
    """
    if name not in FUNCTIONS:
        raise SchemaError(f"unknown function {name!r}; known: {sorted(FUNCTIONS)}")
    if dim < 1:
        raise SchemaError(f"dim must be >= 1, got {dim}")
    fn, (lo, hi) = FUNCTIONS[name]
    encoding = RealVector.cube(dim, lo, hi)

    def objective(x) -> float:
        x = np.asarray(x, dtype=float)
        if check_bounds and (np.any(x < lo) or np.any(x > hi)):
            raise OutOfBounds(f"{name}: point leaves the [{lo}, {hi}]^{dim} box")
        return fn(x)

    return Problem(
        objective=objective,
        encoding=encoding,
        sense=ObjectiveSense.MINIMIZE,
        name=f"{name}-d{dim}",
    )


def onemax_problem(length: int) -> Problem:
    """Maximize the number of ones in a bitstring (optimum = length)."""
    if length < 1:
        raise SchemaError(f"length must be >= 1, got {length}")

    def objective(bits) -> float:
        return float(np.sum(np.asarray(bits)))

    return Problem(
        objective=objective,
        encoding=Bitstring(length),
        sense=ObjectiveSense.MAXIMIZE,
        name=f"onemax-{length}",
    )
