"""Ant colony transition law, pheromone updates, and tour search."""

import numpy as np
import pytest

from niakit.algorithms.aco import (
    AcoParams,
    PheromoneMatrix,
    aco_run,
    aco_transition_probability,
    aco_update_pheromone,
    construct_tour,
    inverse_cost_matrix,
)
from niakit.benchmarks.tsp import random_tsp, tsp_brute_force, tsp_problem
from niakit.core.rng import rng_stream
from niakit.core.run import Budget, ObjectiveSense, Problem, run_optimizer
from niakit.errors import EncodingMismatch, SchemaError


def test_params_validated():
    with pytest.raises(SchemaError):
        AcoParams(evaporation=0.0)
    with pytest.raises(SchemaError):
        AcoParams(evaporation=1.0)
    with pytest.raises(SchemaError):
        AcoParams(alpha=-1.0)
    with pytest.raises(SchemaError):
        AcoParams(tau_min=0.0)
    with pytest.raises(SchemaError):
        AcoParams(deposit="strongest")


def test_equal_trail_equal_distance_splits_evenly():
    tau = np.array([0.0, 1.0, 1.0])
    eta = np.array([0.0, 0.5, 0.5])
    visited = np.array([True, False, False])
    probs = aco_transition_probability(tau, eta, visited, alpha=1.0, beta=2.0)
    assert probs[0] == 0.0
    assert abs(probs[1] - 0.5) <= 1e-12
    assert abs(probs[2] - 0.5) <= 1e-12


def test_distance_only_ratio():
    # alpha=0, beta=1, distances 1 and 2: probabilities 2/3 and 1/3
    tau = np.array([0.0, 7.0, 7.0])
    eta = np.array([0.0, 1.0, 0.5])
    visited = np.array([True, False, False])
    probs = aco_transition_probability(tau, eta, visited, alpha=0.0, beta=1.0)
    assert abs(probs[1] - 2.0 / 3.0) <= 1e-12
    assert abs(probs[2] - 1.0 / 3.0) <= 1e-12


def test_trail_only_ratio():
    # alpha=1, beta=0, trails 3 and 1: probabilities 0.75 and 0.25
    tau = np.array([0.0, 3.0, 1.0])
    eta = np.array([0.0, 0.9, 0.1])
    visited = np.array([True, False, False])
    probs = aco_transition_probability(tau, eta, visited, alpha=1.0, beta=0.0)
    assert abs(probs[1] - 0.75) <= 1e-12
    assert abs(probs[2] - 0.25) <= 1e-12


def test_probabilities_normalize_over_random_inputs():
    rng = rng_stream(1)
    for _ in range(300):
        n = int(rng.integers(3, 12))
        tau = rng.random((n,)) * 5.0
        eta = rng.random((n,)) * 3.0
        visited = rng.random(n) < 0.4
        visited[int(rng.integers(0, n))] = False  # keep one city open
        probs = aco_transition_probability(tau, eta, visited, alpha=1.0, beta=2.0)
        assert abs(float(probs.sum()) - 1.0) <= 1e-12
        assert np.all(probs[visited] == 0.0)
        assert np.all(probs >= 0.0)


def test_raising_trail_raises_probability():
    tau = np.array([0.0, 1.0, 1.0, 1.0])
    eta = np.array([0.0, 0.3, 0.5, 0.7])
    visited = np.array([True, False, False, False])
    before = aco_transition_probability(tau, eta, visited, alpha=1.0, beta=1.0)
    tau_up = tau.copy()
    tau_up[2] *= 3.0
    after = aco_transition_probability(tau_up, eta, visited, alpha=1.0, beta=1.0)
    assert after[2] > before[2]


def test_uniform_fallback_when_weights_vanish():
    tau = np.array([0.0, 0.0, 0.0, 0.0])
    eta = np.array([0.0, 0.0, 0.0, 0.0])
    visited = np.array([True, False, False, False])
    probs = aco_transition_probability(tau, eta, visited, alpha=1.0, beta=1.0)
    assert np.allclose(probs, [0.0, 1 / 3, 1 / 3, 1 / 3], atol=1e-12)


def test_update_rule_frozen_arithmetic():
    params = AcoParams(evaporation=0.5, q=1.0, tau0=1.0, tau_min=1e-12)
    mat = PheromoneMatrix(4, tau0=1.0, tau_min=1e-12)
    ring = np.array([0, 1, 2, 3])
    aco_update_pheromone(mat, [ring], [2.0], params)
    # edge on the tour: half evaporated plus q/L deposit
    assert abs(mat.values[0, 1] - 1.0) <= 1e-12
    assert abs(mat.values[3, 0] - 1.0) <= 1e-12
    # edge on no tour: evaporation only
    assert abs(mat.values[0, 2] - 0.5) <= 1e-12
    assert mat.is_symmetric()


def test_shorter_tours_deposit_more():
    params = AcoParams(evaporation=0.5, q=1.0)
    ring = np.array([0, 1, 2, 3])
    short = PheromoneMatrix(4, tau0=1.0, tau_min=1e-12)
    long = PheromoneMatrix(4, tau0=1.0, tau_min=1e-12)
    aco_update_pheromone(short, [ring], [1.0], params)
    aco_update_pheromone(long, [ring], [4.0], params)
    deposit_short = short.values[0, 1] - 0.5
    deposit_long = long.values[0, 1] - 0.5
    assert abs(deposit_short - 1.0) <= 1e-12
    assert abs(deposit_long - 0.25) <= 1e-12


def test_floor_and_symmetry_survive_update_sequences():
    rng = rng_stream(2)
    params = AcoParams(evaporation=0.8, q=2.0, tau_min=0.01)
    mat = PheromoneMatrix(6, tau0=1.0, tau_min=0.01)
    for _ in range(200):
        tours = [rng.permutation(6) for _ in range(3)]
        lengths = [float(rng.random() * 10 + 0.1) for _ in range(3)]
        aco_update_pheromone(mat, tours, lengths, params)
        off = ~np.eye(6, dtype=bool)
        assert float(mat.values[off].min()) >= 0.01
        assert mat.is_symmetric()
    assert np.all(np.diag(mat.values) == 0.0)


def test_inverse_cost_caps_tiny_distances():
    dist = np.array([[0.0, 0.0], [0.0, 0.0]])
    eta = inverse_cost_matrix(dist)
    assert abs(eta[0, 1] - 1e9) <= 1.0  # 1 / cap, up to float division error
    assert np.isfinite(eta).all()
    assert np.all(np.diag(eta) == 0.0)


def test_construct_tour_is_a_permutation():
    rng = rng_stream(3)
    inst = random_tsp(9, seed=0)
    mat = PheromoneMatrix(9, tau0=1.0, tau_min=1e-12)
    eta = inverse_cost_matrix(inst.dist)
    for _ in range(100):
        tour = construct_tour(rng, mat, eta, alpha=1.0, beta=2.0)
        assert sorted(tour.tolist()) == list(range(9))


def test_run_rejects_wrong_problems():
    from niakit.benchmarks import onemax_problem

    with pytest.raises(EncodingMismatch):
        aco_run(onemax_problem(5), AcoParams(), Budget(max_evaluations=10), seed=0)
    bad_sense = Problem(
        objective=lambda t: 1.0,
        encoding=__import__("niakit").core.encoding.Permutation(4),
        sense=ObjectiveSense.MAXIMIZE,
        data=np.ones((4, 4)),
    )
    with pytest.raises(SchemaError):
        aco_run(bad_sense, AcoParams(), Budget(max_evaluations=10), seed=0)


def test_small_batch_finds_optima():
    hits = 0
    for seed in range(10):
        inst = random_tsp(8, seed=seed)
        optimum, _ = tsp_brute_force(inst)
        record = run_optimizer(
            tsp_problem(inst),
            "aco",
            Budget(max_evaluations=4_000, target_fitness=optimum * (1 + 1e-9)),
            seed=seed,
        )
        hits += record.best_fitness <= optimum * (1 + 1e-9)
    assert hits >= 8


def test_rerun_reproduces_record():
    problem = tsp_problem(random_tsp(7, seed=4))
    budget = Budget(max_evaluations=1_000)
    a = aco_run(problem, AcoParams(), budget, seed=9)
    b = aco_run(problem, AcoParams(), budget, seed=9)
    assert a.reproducibility_key() == b.reproducibility_key()
    assert a.history_is_monotone()
