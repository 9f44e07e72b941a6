"""Generational genetic algorithm with pluggable operators per encoding.

The defaults follow the common textbook setup: tournament selection,
high crossover probability, per-gene mutation at one over the genome
length, and a small elite carried over unchanged each generation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..core.encoding import Bitstring, MixedArray, Permutation, RealVector
from ..core.rng import SOLVER_STREAM, rng_stream
from ..core.run import Budget, BudgetExhausted, ObjectiveSense, Problem, RunRecord, RunTracker
from ..errors import EncodingMismatch, SchemaError


@dataclass(frozen=True)
class GaParams:
    population_size: int = 100
    crossover_rate: float = 0.9
    mutation_rate: float | None = None  # None -> 1 / genome length
    elitism: int = 2
    selection: str = "tournament"
    tournament_size: int = 3
    crossover: str | None = None  # None -> encoding default
    mutation: str | None = None  # None -> encoding default
    blend_alpha: float = 0.5
    sigma_scale: float = 0.1  # gaussian step as a fraction of each range

    def __post_init__(self):
        if self.population_size < 2:
            raise SchemaError(f"population_size must be >= 2, got {self.population_size}")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise SchemaError(f"crossover_rate must lie in [0, 1], got {self.crossover_rate}")
        if self.mutation_rate is not None and not 0.0 <= self.mutation_rate <= 1.0:
            raise SchemaError(f"mutation_rate must lie in [0, 1], got {self.mutation_rate}")
        if not 0 <= self.elitism < self.population_size:
            raise SchemaError("elitism must be >= 0 and smaller than the population")
        if self.selection not in ("tournament", "roulette"):
            raise SchemaError(f"unknown selection {self.selection!r}")
        if self.tournament_size < 1:
            raise SchemaError(f"tournament_size must be >= 1, got {self.tournament_size}")


# -- crossover operators -------------------------------------------------


def one_point_crossover(rng: np.random.Generator, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    point = int(rng.integers(1, a.size))
    return np.concatenate([a[:point], b[point:]])


def uniform_crossover(rng: np.random.Generator, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    mask = rng.random(a.size) < 0.5
    return np.where(mask, a, b)


def order_crossover(rng: np.random.Generator, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """OX1: keep a random slice of the first parent, fill the rest with
    the second parent's cities in their relative order."""
    n = a.size
    i, j = sorted(int(x) for x in rng.integers(0, n, size=2))
    j += 1
    child = np.full(n, -1, dtype=a.dtype)
    child[i:j] = a[i:j]
    kept = set(int(x) for x in a[i:j])
    fill = [int(x) for x in b if int(x) not in kept]
    pos = 0
    for k in list(range(j, n)) + list(range(0, i)):
        child[k] = fill[pos]
        pos += 1
    return child


def blend_crossover(
    rng: np.random.Generator, a: np.ndarray, b: np.ndarray, alpha: float, lower: np.ndarray, upper: np.ndarray
) -> np.ndarray:
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    spread = hi - lo
    child = rng.uniform(lo - alpha * spread, hi + alpha * spread)
    return np.clip(child, lower, upper)


# -- mutation operators --------------------------------------------------


def bit_flip_mutation(rng: np.random.Generator, bits: np.ndarray, rate: float) -> np.ndarray:
    mask = rng.random(bits.size) < rate
    return np.where(mask, 1 - bits, bits)


def swap_mutation(rng: np.random.Generator, perm: np.ndarray, rate: float) -> np.ndarray:
    out = perm.copy()
    for i in range(out.size):
        if rng.random() < rate:
            j = int(rng.integers(0, out.size))
            out[i], out[j] = out[j], out[i]
    return out


def gaussian_mutation(
    rng: np.random.Generator, x: np.ndarray, rate: float, sigma: np.ndarray, lower: np.ndarray, upper: np.ndarray
) -> np.ndarray:
    mask = rng.random(x.size) < rate
    steps = rng.normal(0.0, 1.0, size=x.size) * sigma
    return np.clip(np.where(mask, x + steps, x), lower, upper)


def resample_mutation(rng: np.random.Generator, value: np.ndarray, rate: float, encoding: MixedArray) -> np.ndarray:
    out = value.copy()
    fresh = encoding.sample(rng)
    mask = rng.random(out.size) < rate
    return np.where(mask, fresh, out)


# -- selection ------------------------------------------------------------


def tournament_select(
    rng: np.random.Generator, fitnesses: list[float], k: int, sense: str
) -> int:
    picks = rng.integers(0, len(fitnesses), size=k)
    if sense == ObjectiveSense.MINIMIZE:
        return int(min(picks, key=lambda i: (fitnesses[i], i)))
    return int(min(picks, key=lambda i: (-fitnesses[i], i)))


def roulette_select(rng: np.random.Generator, fitnesses: list[float], sense: str) -> int:
    f = np.asarray(fitnesses, dtype=float)
    if sense == ObjectiveSense.MINIMIZE:
        weights = f.max() - f
    else:
        weights = f - f.min()
    total = float(weights.sum())
    if total <= 0.0 or not np.isfinite(total):
        return int(rng.integers(0, len(fitnesses)))
    return int(rng.choice(len(fitnesses), p=weights / total))


# -- generation step -------------------------------------------------------


def _resolve_operators(encoding, params: GaParams):
    defaults = {
        Bitstring: ("one_point", "bit_flip"),
        Permutation: ("order", "swap"),
        RealVector: ("blend", "gaussian"),
        MixedArray: ("uniform", "resample"),
    }
    legal_cx = {
        "one_point": (Bitstring, RealVector, MixedArray),
        "uniform": (Bitstring, RealVector, MixedArray),
        "order": (Permutation,),
        "blend": (RealVector,),
    }
    legal_mut = {
        "bit_flip": (Bitstring,),
        "swap": (Permutation,),
        "gaussian": (RealVector,),
        "resample": (MixedArray,),
    }
    kind = type(encoding)
    if kind not in defaults:
        raise EncodingMismatch(f"ga does not support {kind.__name__}")
    cx = params.crossover or defaults[kind][0]
    mut = params.mutation or defaults[kind][1]
    if cx not in legal_cx:
        raise SchemaError(f"unknown crossover {cx!r}")
    if mut not in legal_mut:
        raise SchemaError(f"unknown mutation {mut!r}")
    if kind not in legal_cx[cx]:
        raise EncodingMismatch(f"crossover {cx!r} does not apply to {kind.__name__}")
    if kind not in legal_mut[mut]:
        raise EncodingMismatch(f"mutation {mut!r} does not apply to {kind.__name__}")
    return cx, mut


def _genome_length(encoding) -> int:
    if isinstance(encoding, (Bitstring, Permutation)):
        return encoding.length
    if isinstance(encoding, RealVector):
        return len(encoding.bounds)
    return len(encoding.slots)


def ga_step(
    rng: np.random.Generator,
    population: list[np.ndarray],
    fitnesses: list[float],
    encoding,
    params: GaParams,
    sense: str,
) -> tuple[list[np.ndarray], list[float]]:
    """Produce the next generation from an evaluated one.

    Returns (genomes, elite_fitnesses): the first ``len(elite_fitnesses)``
    genomes are the carried-over elites (best first, ties to the earlier
    index) and keep their known fitness; the rest are fresh offspring that
    still need evaluation.
    """
    cx_name, mut_name = _resolve_operators(encoding, params)
    length = _genome_length(encoding)
    rate = params.mutation_rate if params.mutation_rate is not None else 1.0 / length

    order = sorted(range(len(population)), key=lambda i: (fitnesses[i], i))
    if sense == ObjectiveSense.MAXIMIZE:
        order = sorted(range(len(population)), key=lambda i: (-fitnesses[i], i))
    elite_idx = order[: params.elitism]
    genomes: list[np.ndarray] = [population[i].copy() for i in elite_idx]
    elite_fit = [fitnesses[i] for i in elite_idx]

    if isinstance(encoding, RealVector):
        lower, upper = encoding.lower, encoding.upper
        sigma = params.sigma_scale * (upper - lower)
    else:
        lower = upper = sigma = None

    def select() -> int:
        if params.selection == "tournament":
            return tournament_select(rng, fitnesses, params.tournament_size, sense)
        return roulette_select(rng, fitnesses, sense)

    while len(genomes) < params.population_size:
        p1 = population[select()]
        p2 = population[select()]
        if rng.random() < params.crossover_rate:
            if cx_name == "one_point":
                child = one_point_crossover(rng, p1, p2)
            elif cx_name == "uniform":
                child = uniform_crossover(rng, p1, p2)
            elif cx_name == "order":
                child = order_crossover(rng, p1, p2)
            else:
                child = blend_crossover(rng, p1, p2, params.blend_alpha, lower, upper)
        else:
            child = p1.copy()
        if mut_name == "bit_flip":
            child = bit_flip_mutation(rng, child, rate)
        elif mut_name == "swap":
            child = swap_mutation(rng, child, rate)
        elif mut_name == "gaussian":
            child = gaussian_mutation(rng, child, rate, sigma, lower, upper)
        else:
            child = resample_mutation(rng, child, rate, encoding)
        genomes.append(child)
    return genomes, elite_fit


def ga_run(problem: Problem, params: GaParams, budget: Budget, seed: int) -> RunRecord:
    """Run the GA until the budget stops it; elites are not re-evaluated
    (objectives are pure), so every budgeted evaluation is a new genome."""
    rng = rng_stream(seed, SOLVER_STREAM)
    tracker = RunTracker(problem, budget)
    encoding = problem.encoding
    _resolve_operators(encoding, params)  # fail fast before spending budget

    population = [encoding.sample(rng) for _ in range(params.population_size)]
    fitnesses: list[float] = []
    try:
        for genome in population:
            fitnesses.append(tracker.evaluate(genome))
        while tracker.start_iteration():
            genomes, elite_fit = ga_step(rng, population, fitnesses, encoding, params, problem.sense)
            new_fit = list(elite_fit)
            for genome in genomes[len(elite_fit) :]:
                new_fit.append(tracker.evaluate(genome))
            population, fitnesses = genomes, new_fit
    except BudgetExhausted:
        pass
    return tracker.finalize("ga", asdict(params), seed)
