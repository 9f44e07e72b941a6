"""Tour arithmetic, exact TSP solvers, and TSPLIB-style files."""

import numpy as np
import pytest

from niakit.benchmarks.tsp import (
    METRIC_EUCLIDEAN,
    METRIC_MANHATTAN,
    TspInstance,
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
from niakit.errors import InvalidTour, SchemaError, TooLarge

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_square_perimeter_both_metrics():
    perimeter_order = [0, 1, 2, 3]
    assert tour_length(TspInstance(SQUARE, METRIC_EUCLIDEAN), perimeter_order) == 4.0
    assert tour_length(TspInstance(SQUARE, METRIC_MANHATTAN), perimeter_order) == 4.0


def test_square_crossing_order():
    # both diagonals plus two sides
    inst = TspInstance(np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]]))
    length = tour_length(inst, [0, 1, 2, 3])
    assert abs(length - (2.0 + 2.0 * np.sqrt(2.0))) < 1e-12


def test_invalid_tours_rejected():
    inst = TspInstance(SQUARE)
    with pytest.raises(InvalidTour):
        tour_length(inst, [0, 1, 2])
    with pytest.raises(InvalidTour):
        tour_length(inst, [0, 1, 2, 2])
    with pytest.raises(InvalidTour):
        tour_length(inst, [0.5, 1, 2, 3])


def test_instance_needs_three_cities():
    with pytest.raises(SchemaError):
        TspInstance(np.array([[0.0, 0.0], [1.0, 1.0]]))


def test_brute_force_on_square():
    value, tour = tsp_brute_force(TspInstance(SQUARE))
    assert value == 4.0
    assert tour[0] == 0


def test_triangle_has_unique_cycle_length():
    inst = random_tsp(3, seed=5)
    opt, _ = tsp_brute_force(inst)
    for perm in ([0, 1, 2], [0, 2, 1], [1, 0, 2], [2, 1, 0]):
        assert abs(tour_length(inst, perm) - opt) < 1e-12


def test_brute_force_size_guard():
    with pytest.raises(TooLarge):
        tsp_brute_force(random_tsp(11, seed=0))


def test_seed7_cross_oracle_agreement():
    inst = random_tsp(8, seed=7)
    opt_bf, tour_bf = tsp_brute_force(inst)
    result = tsp_branch_and_bound(inst)
    assert result.complete
    assert abs(result.length - opt_bf) <= 1e-9 * opt_bf
    assert abs(tour_length(inst, tour_bf) - opt_bf) < 1e-12
    assert abs(tour_length(inst, result.tour) - result.length) < 1e-12


def test_oracles_agree_many_seeds():
    for seed in range(25):
        n = 5 + seed % 5
        inst = random_tsp(n, seed=seed)
        opt_bf, _ = tsp_brute_force(inst)
        result = tsp_branch_and_bound(inst)
        assert result.complete
        assert abs(result.length - opt_bf) <= 1e-9 * opt_bf, f"seed {seed}"


def test_branch_and_bound_on_square():
    result = tsp_branch_and_bound(TspInstance(SQUARE))
    assert result.complete
    assert result.length == 4.0


def test_branch_and_bound_time_limit_reports_incomplete():
    inst = random_tsp(30, seed=1)
    result = tsp_branch_and_bound(inst, time_limit=1e-6)
    assert not result.complete
    assert result.status == "incomplete"
    # the incumbent is still a real tour
    assert abs(tour_length(inst, result.tour) - result.length) < 1e-9


def test_nearest_neighbor_and_two_opt_stay_valid():
    for seed in range(10):
        inst = random_tsp(12, seed=seed)
        nn = nearest_neighbor_tour(inst)
        assert sorted(nn.tolist()) == list(range(12))
        improved = two_opt(inst, nn)
        assert sorted(improved.tolist()) == list(range(12))
        assert tour_length(inst, improved) <= tour_length(inst, nn) + 1e-12


def test_metric_properties():
    for seed in range(10):
        for metric in (METRIC_EUCLIDEAN, METRIC_MANHATTAN):
            inst = random_tsp(9, seed=seed, metric=metric)
            d = inst.dist
            assert np.array_equal(d, d.T)
            assert np.all(np.diag(d) == 0.0)
            assert np.all(d >= 0.0)
            # triangle inequality with a tiny float slack
            n = inst.n
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        assert d[i, j] <= d[i, k] + d[k, j] + 1e-12


def test_ring_instance_has_perimeter_optimum():
    inst = square_perimeter_tsp(8)
    assert inst.n == 8
    opt, _ = tsp_brute_force(inst)
    assert opt == 4.0


def test_problem_objective_matches_tour_length():
    inst = random_tsp(6, seed=2)
    problem = tsp_problem(inst)
    tour = np.array([3, 1, 0, 2, 5, 4])
    assert problem.objective(tour) == tour_length(inst, tour)


def test_generator_is_deterministic_and_in_unit_square():
    a = random_tsp(7, seed=9)
    b = random_tsp(7, seed=9)
    assert np.array_equal(a.coords, b.coords)
    assert np.all(a.coords >= 0.0) and np.all(a.coords <= 1.0)


def test_tsplib_round_trip(tmp_path):
    for metric in (METRIC_EUCLIDEAN, METRIC_MANHATTAN):
        inst = random_tsp(5, seed=3, metric=metric)
        path = tmp_path / f"inst-{metric}.tsp"
        write_tsplib(inst, str(path))
        clone = read_tsplib(str(path))
        assert clone.metric == metric
        assert np.array_equal(clone.coords, inst.coords)
