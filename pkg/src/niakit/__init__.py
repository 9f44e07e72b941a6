"""niakit: nature-inspired metaheuristics with exact baselines.

The package bundles four population solvers (genetic algorithm, ant
colony optimization, fruit fly optimization, bat algorithm), exact and
heuristic baselines for knapsack and the travelling salesman problem,
a goal-oriented catalogue of nature-inspired algorithms with a
rule-based recommender, multiplicative Holt-Winters forecasting with
metaheuristic parameter fitting, and a benchmarking harness with a CLI.
"""

from .core import (
    Bitstring,
    Budget,
    CandidateSolution,
    ObjectiveSense,
    Permutation,
    Problem,
    RealVector,
    RunRecord,
    rng_stream,
    run_optimizer,
)

__version__ = "0.1.0"

__all__ = [
    "Bitstring",
    "Budget",
    "CandidateSolution",
    "ObjectiveSense",
    "Permutation",
    "Problem",
    "RealVector",
    "RunRecord",
    "__version__",
    "rng_stream",
    "run_optimizer",
]
