"""Ant colony optimization for tour problems over a cost matrix.

Ants build tours city by city; an edge's attractiveness combines the
pheromone level (raised to ``alpha``) with the inverse edge cost (raised
to ``beta``). After every iteration the pheromone evaporates and the
best tour found so far deposits ``q / length`` along its edges (all-ants
deposit is available as an option). A strictly positive pheromone floor
keeps every edge reachable forever; the default floor is large enough
that the colony keeps exploring after the trail concentrates.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..benchmarks.tsp import TspInstance
from ..core.encoding import Permutation
from ..core.rng import SOLVER_STREAM, rng_stream
from ..core.run import Budget, BudgetExhausted, ObjectiveSense, Problem, RunRecord, RunTracker
from ..errors import EncodingMismatch, SchemaError

#: edge costs below this are treated as this, so inverse costs stay finite
MIN_EDGE_COST = 1e-9

DEPOSIT_GLOBAL_BEST = "global_best"
DEPOSIT_ALL_ANTS = "all_ants"


@dataclass(frozen=True)
class AcoParams:
    n_ants: int | None = None  # None -> one ant per city
    alpha: float = 1.0  # pheromone exponent
    beta: float = 2.0  # inverse-cost exponent
    evaporation: float = 0.5
    q: float = 1.0  # deposit scale
    tau0: float = 1.0  # initial pheromone
    tau_min: float = 0.05  # floor after every update; keeps every edge explorable
    deposit: str = DEPOSIT_GLOBAL_BEST

    def __post_init__(self):
        if self.n_ants is not None and self.n_ants < 1:
            raise SchemaError(f"n_ants must be >= 1, got {self.n_ants}")
        if not 0.0 < self.evaporation < 1.0:
            raise SchemaError(f"evaporation must lie in (0, 1), got {self.evaporation}")
        if self.alpha < 0 or self.beta < 0:
            raise SchemaError("alpha and beta must be non-negative")
        if self.q <= 0 or self.tau0 <= 0 or self.tau_min <= 0:
            raise SchemaError("q, tau0 and tau_min must be positive")
        if self.deposit not in (DEPOSIT_GLOBAL_BEST, DEPOSIT_ALL_ANTS):
            raise SchemaError(f"unknown deposit rule {self.deposit!r}")


class PheromoneMatrix:
    """Symmetric trail levels with a strictly positive floor."""

    def __init__(self, n: int, tau0: float, tau_min: float):
        if n < 2:
            raise SchemaError(f"need at least 2 nodes, got {n}")
        self.tau_min = tau_min
        self.values = np.full((n, n), float(tau0))
        np.fill_diagonal(self.values, 0.0)

    def evaporate(self, rho: float):
        self.values *= 1.0 - rho
        self._clamp()

    def deposit_tour(self, tour: np.ndarray, amount: float):
        nxt = np.roll(tour, -1)
        self.values[tour, nxt] += amount
        self.values[nxt, tour] += amount

    def _clamp(self):
        off = ~np.eye(self.values.shape[0], dtype=bool)
        self.values[off] = np.maximum(self.values[off], self.tau_min)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.values, self.values.T))


def inverse_cost_matrix(dist: np.ndarray) -> np.ndarray:
    """1 / cost with tiny costs capped at MIN_EDGE_COST; diagonal zero."""
    d = np.maximum(np.asarray(dist, dtype=float), MIN_EDGE_COST)
    eta = 1.0 / d
    np.fill_diagonal(eta, 0.0)
    return eta


def aco_transition_probability(
    tau_row: np.ndarray, eta_row: np.ndarray, visited: np.ndarray, alpha: float, beta: float
) -> np.ndarray:
    """Move distribution over cities: zero where visited, normalized to
    one over the rest. Falls back to uniform over the unvisited cities
    when every weight vanishes or overflows."""
    weights = np.where(visited, 0.0, tau_row ** alpha * eta_row ** beta)
    total = weights.sum()
    if not np.isfinite(total) or total <= 0.0:
        weights = np.where(visited, 0.0, 1.0)
        total = weights.sum()
    return weights / total


def construct_tour(
    rng: np.random.Generator, pheromone: PheromoneMatrix, eta: np.ndarray, alpha: float, beta: float
) -> np.ndarray:
    n = eta.shape[0]
    tour = np.empty(n, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    current = int(rng.integers(0, n))
    tour[0] = current
    visited[current] = True
    for step in range(1, n):
        probs = aco_transition_probability(pheromone.values[current], eta[current], visited, alpha, beta)
        current = int(rng.choice(n, p=probs))
        tour[step] = current
        visited[current] = True
    return tour


def aco_update_pheromone(
    pheromone: PheromoneMatrix, tours: list[np.ndarray], lengths: list[float], params: AcoParams
):
    """Evaporate, then deposit q / length for each given tour, then clamp
    to the floor."""
    pheromone.evaporate(params.evaporation)
    for tour, length in zip(tours, lengths):
        pheromone.deposit_tour(tour, params.q / max(length, MIN_EDGE_COST))
    pheromone._clamp()


def _cost_matrix(problem: Problem) -> np.ndarray:
    data = problem.data
    if isinstance(data, TspInstance):
        return data.dist
    mat = np.asarray(data, dtype=float) if data is not None else None
    if mat is None or mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise SchemaError("aco needs problem.data to be a TspInstance or a square cost matrix")
    return mat


def aco_run(problem: Problem, params: AcoParams, budget: Budget, seed: int) -> RunRecord:
    if not isinstance(problem.encoding, Permutation):
        raise EncodingMismatch(f"aco supports Permutation, got {type(problem.encoding).__name__}")
    if problem.sense != ObjectiveSense.MINIMIZE:
        raise SchemaError("aco minimizes tour cost; wrap the objective for maximization")
    dist = _cost_matrix(problem)
    n = problem.encoding.length
    if dist.shape[0] != n:
        raise SchemaError(f"cost matrix is {dist.shape[0]}x{dist.shape[0]} but tours have {n} cities")

    rng = rng_stream(seed, SOLVER_STREAM)
    tracker = RunTracker(problem, budget)
    pheromone = PheromoneMatrix(n, params.tau0, params.tau_min)
    eta = inverse_cost_matrix(dist)
    n_ants = params.n_ants if params.n_ants is not None else n

    best_tour: np.ndarray | None = None
    best_len = np.inf
    try:
        while tracker.start_iteration():
            tours: list[np.ndarray] = []
            lengths: list[float] = []
            for _ in range(n_ants):
                tour = construct_tour(rng, pheromone, eta, params.alpha, params.beta)
                length = tracker.evaluate(tour)
                tours.append(tour)
                lengths.append(length)
                if length < best_len:
                    best_len = length
                    best_tour = tour
            if params.deposit == DEPOSIT_ALL_ANTS:
                aco_update_pheromone(pheromone, tours, lengths, params)
            else:
                aco_update_pheromone(pheromone, [best_tour], [best_len], params)
    except BudgetExhausted:
        pass
    return tracker.finalize("aco", asdict(params), seed)
