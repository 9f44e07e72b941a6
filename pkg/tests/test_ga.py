"""Genetic algorithm operators, selection, and full runs."""

import numpy as np
import pytest

from niakit.algorithms.ga import (
    GaParams,
    bit_flip_mutation,
    blend_crossover,
    ga_run,
    ga_step,
    gaussian_mutation,
    one_point_crossover,
    order_crossover,
    roulette_select,
    swap_mutation,
    tournament_select,
    uniform_crossover,
)
from niakit.benchmarks import onemax_problem
from niakit.benchmarks.knapsack import knapsack_dp, knapsack_problem, random_knapsack
from niakit.core.encoding import Bitstring, Permutation, RealVector
from niakit.core.rng import rng_stream
from niakit.core.run import Budget, ObjectiveSense, Problem
from niakit.errors import EncodingMismatch, SchemaError


def test_params_validated():
    with pytest.raises(SchemaError):
        GaParams(population_size=1)
    with pytest.raises(SchemaError):
        GaParams(crossover_rate=1.5)
    with pytest.raises(SchemaError):
        GaParams(elitism=10, population_size=10)
    with pytest.raises(SchemaError):
        GaParams(selection="rank")


def test_one_point_crossover_mixes_parents():
    rng = rng_stream(0)
    a = np.zeros(10, dtype=np.int64)
    b = np.ones(10, dtype=np.int64)
    for _ in range(50):
        child = one_point_crossover(rng, a, b)
        assert child.size == 10
        switch = np.flatnonzero(np.diff(child))
        assert switch.size == 1  # single cut: 0s then 1s


def test_uniform_crossover_picks_from_parents():
    rng = rng_stream(1)
    a = np.arange(10)
    b = np.arange(10) + 100
    for _ in range(50):
        child = uniform_crossover(rng, a, b)
        assert all(c in (x, x + 100) for c, x in zip(child, np.arange(10)))


def test_order_crossover_keeps_permutations():
    rng = rng_stream(2)
    for _ in range(300):
        a = rng.permutation(12)
        b = rng.permutation(12)
        child = order_crossover(rng, a, b)
        assert sorted(child.tolist()) == list(range(12))


def test_swap_mutation_keeps_permutations():
    rng = rng_stream(3)
    for _ in range(300):
        perm = rng.permutation(15)
        out = swap_mutation(rng, perm, rate=0.5)
        assert sorted(out.tolist()) == list(range(15))


def test_bit_flip_rate_zero_is_identity():
    rng = rng_stream(4)
    bits = rng.integers(0, 2, size=30)
    assert np.array_equal(bit_flip_mutation(rng, bits, rate=0.0), bits)


def test_bit_flip_rate_one_flips_everything():
    rng = rng_stream(5)
    bits = rng.integers(0, 2, size=30)
    assert np.array_equal(bit_flip_mutation(rng, bits, rate=1.0), 1 - bits)


def test_blend_and_gaussian_respect_bounds():
    rng = rng_stream(6)
    enc = RealVector.cube(4, -1.0, 1.0)
    lower, upper = enc.lower, enc.upper
    sigma = 0.3 * (upper - lower)
    for _ in range(200):
        a = enc.sample(rng)
        b = enc.sample(rng)
        child = blend_crossover(rng, a, b, 0.5, lower, upper)
        assert np.all(child >= lower) and np.all(child <= upper)
        mutated = gaussian_mutation(rng, child, 1.0, sigma, lower, upper)
        assert np.all(mutated >= lower) and np.all(mutated <= upper)


def test_tournament_prefers_better_and_breaks_ties_low():
    rng = rng_stream(7)
    fitnesses = [5.0, 1.0, 5.0, 1.0]
    # tournaments sample with replacement; k=64 covers all four indices
    picks = {tournament_select(rng, fitnesses, k=64, sense=ObjectiveSense.MINIMIZE) for _ in range(50)}
    assert picks == {1}  # index 1 beats the equal index 3 by position
    picks = {tournament_select(rng, fitnesses, k=64, sense=ObjectiveSense.MAXIMIZE) for _ in range(50)}
    assert picks == {0}


def test_roulette_uniform_fallback_on_flat_fitness():
    rng = rng_stream(8)
    picks = {roulette_select(rng, [2.0, 2.0, 2.0], sense=ObjectiveSense.MINIMIZE) for _ in range(100)}
    assert picks == {0, 1, 2}


def test_step_carries_elites_first():
    rng = rng_stream(9)
    enc = Bitstring(8)
    population = [rng.integers(0, 2, size=8) for _ in range(10)]
    fitnesses = [float(p.sum()) for p in population]
    params = GaParams(population_size=10, elitism=2)
    genomes, elite_fit = ga_step(rng, population, fitnesses, enc, params, ObjectiveSense.MAXIMIZE)
    assert len(genomes) == 10
    assert len(elite_fit) == 2
    ranked = sorted(fitnesses, reverse=True)
    assert elite_fit == ranked[:2]
    assert float(genomes[0].sum()) == elite_fit[0]


def test_clones_stay_identical_without_variation():
    rng = rng_stream(10)
    enc = Bitstring(6)
    clone = np.array([1, 0, 1, 1, 0, 0])
    population = [clone.copy() for _ in range(8)]
    fitnesses = [3.0] * 8
    params = GaParams(population_size=8, crossover_rate=0.0, mutation_rate=0.0)
    genomes, _ = ga_step(rng, population, fitnesses, enc, params, ObjectiveSense.MAXIMIZE)
    for g in genomes:
        assert np.array_equal(g, clone)


def test_operator_legality_checked():
    problem = onemax_problem(8)
    with pytest.raises(EncodingMismatch):
        ga_run(problem, GaParams(crossover="order"), Budget(max_evaluations=10), seed=0)
    with pytest.raises(EncodingMismatch):
        ga_run(problem, GaParams(mutation="gaussian"), Budget(max_evaluations=10), seed=0)


def test_onemax_batch_hits_optimum():
    hits = 0
    for seed in range(20):
        record = ga_run(
            onemax_problem(20),
            GaParams(population_size=50),
            Budget(max_evaluations=10_000, target_fitness=20.0),
            seed=seed,
        )
        hits += record.best_fitness == 20.0
    assert hits >= 19


def test_elitism_makes_best_monotone_across_generations():
    problem = onemax_problem(30)
    record = ga_run(problem, GaParams(), Budget(max_evaluations=5_000), seed=3)
    assert record.history_is_monotone()
    fits = [f for _, f in record.history]
    assert fits == sorted(fits)


def test_knapsack_seed42_reaches_dp_often():
    inst = random_knapsack(15, seed=42)
    optimum, _ = knapsack_dp(inst)
    problem = knapsack_problem(inst)
    hits = 0
    for seed in range(10):
        record = ga_run(
            problem,
            GaParams(),
            Budget(max_evaluations=50_000, target_fitness=float(optimum)),
            seed=seed,
        )
        hits += record.best_fitness == float(optimum)
    assert hits >= 9


def test_permutation_run_returns_valid_tour():
    from niakit.benchmarks.tsp import random_tsp, tsp_problem

    problem = tsp_problem(random_tsp(7, seed=0))
    record = ga_run(problem, GaParams(population_size=20), Budget(max_evaluations=2_000), seed=1)
    assert sorted(record.best) == list(range(7))


def test_real_vector_run_improves_sphere():
    problem = Problem(
        objective=lambda x: float(np.dot(x, x)),
        encoding=RealVector.cube(3, -5.0, 5.0),
        sense=ObjectiveSense.MINIMIZE,
    )
    record = ga_run(problem, GaParams(population_size=30), Budget(max_evaluations=6_000), seed=2)
    assert record.best_fitness < 0.1


def test_rerun_reproduces_record():
    problem = onemax_problem(16)
    budget = Budget(max_evaluations=3_000)
    a = ga_run(problem, GaParams(), budget, seed=11)
    b = ga_run(problem, GaParams(), budget, seed=11)
    assert a.reproducibility_key() == b.reproducibility_key()
