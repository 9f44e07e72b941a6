"""Travelling salesman instances, exact solvers, and tour utilities.

Tours are numpy int arrays holding a permutation of all cities; the
length always includes the closing edge back to the first city. Exact
solvers canonicalize tours to start at city 0 (a closed tour's length
does not depend on the starting point or direction).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from ..core.encoding import Permutation
from ..core.rng import INSTANCE_STREAM, rng_stream
from ..core.run import ObjectiveSense, Problem
from ..errors import InvalidTour, SchemaError, TooLarge

BRUTE_FORCE_MAX_CITIES = 10

METRIC_EUCLIDEAN = "euclidean"
METRIC_MANHATTAN = "manhattan"

SEARCH_COMPLETE = "complete"
SEARCH_INCOMPLETE = "incomplete"


def _distance_matrix(coords: np.ndarray, metric: str) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    if metric == METRIC_EUCLIDEAN:
        return np.sqrt((diff ** 2).sum(axis=2))
    if metric == METRIC_MANHATTAN:
        return np.abs(diff).sum(axis=2)
    raise SchemaError(f"unknown metric {metric!r}")


@dataclass
class TspInstance:
    """City coordinates plus a metric; distances stay real-valued."""

    coords: np.ndarray
    metric: str = METRIC_EUCLIDEAN
    name: str = ""
    dist: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise SchemaError(f"coords must be (n, 2), got {coords.shape}")
        if coords.shape[0] < 3:
            raise SchemaError(f"need at least 3 cities, got {coords.shape[0]}")
        self.coords = coords
        self.dist = _distance_matrix(coords, self.metric)

    @property
    def n(self) -> int:
        return self.coords.shape[0]


def check_tour(n: int, tour) -> np.ndarray:
    """Return the tour as an int array; raise InvalidTour if it is not a
    permutation of 0..n-1."""
    t = np.asarray(tour)
    if t.shape != (n,) or not np.issubdtype(t.dtype, np.integer):
        raise InvalidTour(f"tour must be {n} integer city ids, got shape {t.shape}")
    if not np.array_equal(np.sort(t), np.arange(n)):
        raise InvalidTour("tour must visit every city exactly once")
    return t.astype(np.int64)


def tour_length(inst: TspInstance, tour, validate: bool = True) -> float:
    t = check_tour(inst.n, tour) if validate else np.asarray(tour, dtype=np.int64)
    return float(inst.dist[t, np.roll(t, -1)].sum())


# -- exact solvers ------------------------------------------------------


def tsp_brute_force(inst: TspInstance) -> tuple[float, np.ndarray]:
    """Exact optimum by enumerating tours with city 0 fixed first.

    Limited to 10 cities. Tie-break: the lexicographically smallest tour
    among the optima (permutations are visited in lexicographic order and
    only strict improvements are kept).
    """
    n = inst.n
    if n > BRUTE_FORCE_MAX_CITIES:
        raise TooLarge(f"brute force capped at {BRUTE_FORCE_MAX_CITIES} cities, got {n}")
    d = inst.dist
    best_len = np.inf
    best_perm: tuple[int, ...] = ()
    for perm in itertools.permutations(range(1, n)):
        length = d[0, perm[0]] + d[perm[-1], 0]
        for a, b in zip(perm, perm[1:]):
            length += d[a, b]
        if length < best_len:
            best_len = length
            best_perm = perm
    tour = np.array((0,) + best_perm, dtype=np.int64)
    return float(best_len), tour


def nearest_neighbor_tour(inst: TspInstance, start: int = 0) -> np.ndarray:
    """Greedy construction; ties go to the lowest city index."""
    n = inst.n
    d = inst.dist
    visited = np.zeros(n, dtype=bool)
    tour = np.empty(n, dtype=np.int64)
    tour[0] = start
    visited[start] = True
    for i in range(1, n):
        row = np.where(visited, np.inf, d[tour[i - 1]])
        nxt = int(np.argmin(row))
        tour[i] = nxt
        visited[nxt] = True
    return tour


def two_opt(inst: TspInstance, tour: np.ndarray) -> np.ndarray:
    """First-improvement 2-opt passes until no exchange helps."""
    t = list(int(c) for c in tour)
    n = len(t)
    d = inst.dist
    improved = True
    while improved:
        improved = False
        for i in range(n - 1):
            a, b = t[i], t[i + 1]
            for j in range(i + 2, n):
                c = t[j]
                e = t[(j + 1) % n]
                if a == e:
                    continue
                delta = d[a, c] + d[b, e] - d[a, b] - d[c, e]
                if delta < -1e-12:
                    t[i + 1 : j + 1] = reversed(t[i + 1 : j + 1])
                    improved = True
                    break
            if improved:
                break
    return np.array(t, dtype=np.int64)


@dataclass
class TspSearchResult:
    length: float
    tour: np.ndarray
    status: str
    nodes_expanded: int

    @property
    def complete(self) -> bool:
        return self.status == SEARCH_COMPLETE


def tsp_branch_and_bound(inst: TspInstance, time_limit: float | None = None) -> TspSearchResult:
    """Depth-first branch and bound with an admissible half-edges bound.

    Every city's two cheapest incident edges are precomputed; a partial
    path ending at ``last`` with unvisited set U is bounded below by

        g + (d(last, U)_min + sum_{v in U}(e1[v] + e2[v]) + d(0, U)_min) / 2

    which never overestimates because every completion edge is counted at
    most twice across the incident-vertex sums. The incumbent starts from
    a nearest-neighbor tour polished by 2-opt. With a time limit the
    search may stop early and report SEARCH_INCOMPLETE; the incumbent is
    still a valid tour.
    """
    n = inst.n
    d = [[float(x) for x in row] for row in inst.dist]
    start_tour = two_opt(inst, nearest_neighbor_tour(inst))
    best_len = tour_length(inst, start_tour, validate=False)
    best_tour = [int(c) for c in start_tour]

    two_cheapest = []
    for i in range(n):
        row = sorted(d[i][j] for j in range(n) if j != i)
        two_cheapest.append(row[0] + row[1])
    neighbors = [sorted((j for j in range(n) if j != i), key=lambda j, i=i: d[i][j]) for i in range(n)]

    deadline = None if time_limit is None else time.perf_counter() + time_limit
    status = SEARCH_COMPLETE
    nodes = 0
    visited = [False] * n
    visited[0] = True
    path = [0]

    def dfs(last: int, g: float, sum_two: float) -> bool:
        """Returns True when the search must stop (deadline hit)."""
        nonlocal best_len, best_tour, nodes, status
        nodes += 1
        if nodes % 4096 == 0 and deadline is not None and time.perf_counter() >= deadline:
            status = SEARCH_INCOMPLETE
            return True
        if len(path) == n:
            total = g + d[last][0]
            if total < best_len:
                best_len = total
                best_tour = list(path)
            return False
        min_last = np.inf
        min_home = np.inf
        for j in range(n):
            if not visited[j]:
                if d[last][j] < min_last:
                    min_last = d[last][j]
                if d[0][j] < min_home:
                    min_home = d[0][j]
        if g + 0.5 * (min_last + sum_two + min_home) >= best_len:
            return False
        for j in neighbors[last]:
            if visited[j]:
                continue
            g2 = g + d[last][j]
            if g2 >= best_len:
                continue
            visited[j] = True
            path.append(j)
            stop = dfs(j, g2, sum_two - two_cheapest[j])
            path.pop()
            visited[j] = False
            if stop:
                return True
        return False

    dfs(0, 0.0, sum(two_cheapest[v] for v in range(1, n)))
    tour = np.array(best_tour, dtype=np.int64)
    return TspSearchResult(float(best_len), tour, status, nodes)


# -- problem hookup and generators --------------------------------------


def tsp_problem(inst: TspInstance) -> Problem:
    """Minimization problem over city permutations."""

    def objective(tour) -> float:
        return tour_length(inst, tour, validate=False)

    return Problem(
        objective=objective,
        encoding=Permutation(inst.n),
        sense=ObjectiveSense.MINIMIZE,
        name=inst.name or f"tsp-n{inst.n}",
        data=inst,
    )


def random_tsp(n: int, seed: int = 0, metric: str = METRIC_EUCLIDEAN, scale: float = 1.0) -> TspInstance:
    """Cities uniform in the [0, scale] square."""
    if n < 3:
        raise SchemaError(f"need at least 3 cities, got n={n}")
    rng = rng_stream(seed, INSTANCE_STREAM)
    coords = rng.uniform(0.0, scale, size=(n, 2))
    return TspInstance(coords, metric=metric, name=f"random-n{n}-seed{seed}")


def square_perimeter_tsp(n: int) -> TspInstance:
    """n cities evenly spaced on the unit square boundary (n divisible
    by 4, so all four corners are cities). The cities are in convex
    position, hence the optimal tour walks the boundary and has length
    exactly 4.0."""
    if n < 4 or n % 4 != 0:
        raise SchemaError(f"n must be a positive multiple of 4, got {n}")
    arcs = np.arange(n) * (4.0 / n)
    coords = np.empty((n, 2))
    for i, s in enumerate(arcs):
        side, offset = int(s), s - int(s)
        if side == 0:
            coords[i] = (offset, 0.0)
        elif side == 1:
            coords[i] = (1.0, offset)
        elif side == 2:
            coords[i] = (1.0 - offset, 1.0)
        else:
            coords[i] = (0.0, 1.0 - offset)
    return TspInstance(coords, metric=METRIC_EUCLIDEAN, name=f"square-perimeter-n{n}")


# -- TSPLIB-style I/O ----------------------------------------------------

_WEIGHT_TYPE_TO_METRIC = {"EUC_2D": METRIC_EUCLIDEAN, "MAN_2D": METRIC_MANHATTAN}
_METRIC_TO_WEIGHT_TYPE = {v: k for k, v in _WEIGHT_TYPE_TO_METRIC.items()}


def write_tsplib(inst: TspInstance, path: str):
    """TSPLIB-style coordinate file (EUC_2D or MAN_2D only)."""
    lines = [
        f"NAME : {inst.name or 'instance'}",
        "TYPE : TSP",
        f"DIMENSION : {inst.n}",
        f"EDGE_WEIGHT_TYPE : {_METRIC_TO_WEIGHT_TYPE[inst.metric]}",
        "NODE_COORD_SECTION",
    ]
    for i, (x, y) in enumerate(inst.coords, start=1):
        lines.append(f"{i} {float(x)!r} {float(y)!r}")
    lines.append("EOF")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_tsplib(path: str) -> TspInstance:
    """Read the coordinate subset of TSPLIB: NAME, DIMENSION,
    EDGE_WEIGHT_TYPE (EUC_2D or MAN_2D), NODE_COORD_SECTION. Distances
    are kept real-valued (no integer rounding)."""
    name = ""
    dimension = None
    metric = None
    coords: list[tuple[float, float]] = []
    in_coords = False
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line == "EOF":
                continue
            if in_coords:
                parts = line.split()
                if len(parts) != 3:
                    raise SchemaError(f"{path}: bad coordinate line {line!r}")
                coords.append((float(parts[1]), float(parts[2])))
                continue
            if line == "NODE_COORD_SECTION":
                in_coords = True
                continue
            if ":" in line:
                key, _, value = line.partition(":")
                key = key.strip().upper()
                value = value.strip()
                if key == "NAME":
                    name = value
                elif key == "DIMENSION":
                    dimension = int(value)
                elif key == "EDGE_WEIGHT_TYPE":
                    if value not in _WEIGHT_TYPE_TO_METRIC:
                        raise SchemaError(f"{path}: unsupported EDGE_WEIGHT_TYPE {value!r}")
                    metric = _WEIGHT_TYPE_TO_METRIC[value]
    if metric is None:
        raise SchemaError(f"{path}: missing EDGE_WEIGHT_TYPE")
    if dimension is None:
        raise SchemaError(f"{path}: missing DIMENSION")
    if len(coords) != dimension:
        raise SchemaError(f"{path}: DIMENSION {dimension} but {len(coords)} coordinates")
    return TspInstance(np.array(coords), metric=metric, name=name)
