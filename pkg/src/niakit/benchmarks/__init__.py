"""Benchmark problems: knapsack, travelling salesman, continuous test
functions, and seasonal series for forecast fitting."""

from .functions import FUNCTIONS, continuous_problem, onemax_problem, rastrigin, rosenbrock, sphere
from .holtwinters import (
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
from .knapsack import (
    KnapsackInstance,
    knapsack_brute_force,
    knapsack_dp,
    knapsack_greedy,
    knapsack_meet_in_middle,
    knapsack_problem,
    random_knapsack,
    read_knapsack,
    repair_bits,
    write_knapsack,
)
from .tsp import (
    TspInstance,
    TspSearchResult,
    check_tour,
    nearest_neighbor_tour,
    random_tsp,
    read_tsplib,
    square_perimeter_tsp,
    tour_length,
    tsp_branch_and_bound,
    tsp_brute_force,
    tsp_problem,
    two_opt,
    write_tsplib,
)

__all__ = [
    "FUNCTIONS",
    "HoltWintersParams",
    "KnapsackInstance",
    "TspInstance",
    "TspSearchResult",
    "check_tour",
    "continuous_problem",
    "hw_fit_sse",
    "hw_forecast",
    "hw_grid_oracle",
    "hw_smooth",
    "knapsack_brute_force",
    "knapsack_dp",
    "knapsack_greedy",
    "knapsack_meet_in_middle",
    "knapsack_problem",
    "nearest_neighbor_tour",
    "onemax_problem",
    "random_knapsack",
    "random_tsp",
    "rastrigin",
    "read_knapsack",
    "read_series_csv",
    "read_tsplib",
    "repair_bits",
    "rosenbrock",
    "sphere",
    "square_perimeter_tsp",
    "synthetic_seasonal_series",
    "tour_length",
    "tsp_branch_and_bound",
    "tsp_brute_force",
    "tsp_problem",
    "two_opt",
    "validate_series",
    "write_knapsack",
    "write_series_csv",
    "write_tsplib",
]
