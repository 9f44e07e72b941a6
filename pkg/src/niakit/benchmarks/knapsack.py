"""0/1 knapsack: instances, exact solvers, greedy baseline, GA hookup.

All solvers return ``(value, bits)`` where bits is a 0/1 numpy array over
the items, so they can be cross-checked directly. Ties between equally
valued solutions are broken deterministically (documented per solver).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core.encoding import Bitstring
from ..core.rng import INSTANCE_STREAM, rng_stream
from ..core.run import ObjectiveSense, Problem
from ..errors import CapacityOverflow, SchemaError, TooLarge

BRUTE_FORCE_MAX_ITEMS = 25
MEET_IN_MIDDLE_MAX_ITEMS = 40
DP_MAX_CELLS = 100_000_000


@dataclass(frozen=True)
class KnapsackInstance:
    """Item values/weights (positive ints) and a capacity."""

    values: tuple[int, ...]
    weights: tuple[int, ...]
    capacity: int

    def __post_init__(self):
        if len(self.values) != len(self.weights):
            raise SchemaError("values and weights must have equal length")
        if any(v <= 0 for v in self.values) or any(w <= 0 for w in self.weights):
            raise SchemaError("item values and weights must be positive")
        if self.capacity < 0:
            raise SchemaError("capacity must be non-negative")

    @property
    def n(self) -> int:
        return len(self.values)

    def value_of(self, bits) -> int:
        bits = np.asarray(bits)
        return int(np.dot(bits, np.asarray(self.values)))

    def weight_of(self, bits) -> int:
        bits = np.asarray(bits)
        return int(np.dot(bits, np.asarray(self.weights)))

    def is_feasible(self, bits) -> bool:
        return self.weight_of(bits) <= self.capacity


# -- exact solvers ------------------------------------------------------


def knapsack_dp(inst: KnapsackInstance, max_cells: int = DP_MAX_CELLS) -> tuple[int, np.ndarray]:
    """Exact optimum by dynamic programming over capacities, O(n*W).

    Memory is one uint8 take/skip table of (n, W+1) cells plus a rolling
    value row; instances above ``max_cells`` cells raise CapacityOverflow.
    Tie-break: when taking an item does not improve the value, it is
    skipped, so the reported subset prefers later-indexed items only when
    they strictly help.
    """
    n, cap = inst.n, inst.capacity
    cells = n * (cap + 1)
    if cells > max_cells:
        raise CapacityOverflow(
            f"dp table would need {cells} cells (limit {max_cells}); "
            "reduce capacity resolution or use meet_in_middle"
        )
    values = np.asarray(inst.values, dtype=np.int64)
    weights = np.asarray(inst.weights, dtype=np.int64)
    row = np.zeros(cap + 1, dtype=np.int64)
    take = np.zeros((n, cap + 1), dtype=np.uint8)
    for i in range(n):
        w, v = int(weights[i]), int(values[i])
        if w <= cap:
            cand = row[: cap + 1 - w] + v
            better = cand > row[w:]
            take[i, w:] = better
            row[w:] = np.where(better, cand, row[w:])
    bits = np.zeros(n, dtype=np.int64)
    w = cap
    for i in range(n - 1, -1, -1):
        if take[i, w]:
            bits[i] = 1
            w -= int(weights[i])
    best = int(row[cap])
    assert inst.value_of(bits) == best and inst.weight_of(bits) <= cap
    return best, bits


def knapsack_brute_force(inst: KnapsackInstance) -> tuple[int, np.ndarray]:
    """Exact optimum by subset enumeration; limited to 25 items.

    Enumerates all 2^n subsets in fixed-size chunks so memory stays
    bounded. Tie-break: the lowest subset mask (items encoded with item 0
    as the least significant bit) among the optima.
    """
    n = inst.n
    if n > BRUTE_FORCE_MAX_ITEMS:
        raise TooLarge(f"brute force capped at {BRUTE_FORCE_MAX_ITEMS} items, got {n}")
    values = np.asarray(inst.values, dtype=np.int64)
    weights = np.asarray(inst.weights, dtype=np.int64)
    shifts = np.arange(n, dtype=np.uint64)
    best_value = 0
    best_mask = 0
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        stop = min(start + chunk, 1 << n)
        masks = np.arange(start, stop, dtype=np.uint64)
        bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(np.int64)
        w = bits @ weights
        v = bits @ values
        v[w > inst.capacity] = -1
        i = int(np.argmax(v))
        if v[i] > best_value:
            best_value = int(v[i])
            best_mask = start + i
    bits = np.array([(best_mask >> i) & 1 for i in range(n)], dtype=np.int64)
    return best_value, bits


def knapsack_meet_in_middle(inst: KnapsackInstance) -> tuple[int, np.ndarray]:
    """Exact optimum by half-enumeration; limited to 40 items.

    Splits the items in two halves, enumerates each, prunes the second
    half to its weight-sorted Pareto staircase, and matches every first
    half subset to the best fitting complement via binary search.
    Tie-break: lowest first-half mask, then earliest staircase entry.
    """
    n = inst.n
    if n > MEET_IN_MIDDLE_MAX_ITEMS:
        raise TooLarge(f"meet-in-the-middle capped at {MEET_IN_MIDDLE_MAX_ITEMS} items, got {n}")
    values = np.asarray(inst.values, dtype=np.int64)
    weights = np.asarray(inst.weights, dtype=np.int64)
    half = n // 2

    def enumerate_half(idx: np.ndarray):
        k = len(idx)
        masks = np.arange(1 << k, dtype=np.uint64)
        bits = ((masks[:, None] >> np.arange(k, dtype=np.uint64)[None, :]) & 1).astype(np.int64)
        return bits @ weights[idx], bits @ values[idx]

    idx_a = np.arange(half)
    idx_b = np.arange(half, n)
    wa, va = enumerate_half(idx_a)
    wb, vb = enumerate_half(idx_b)

    order = np.argsort(wb, kind="stable")
    wb_sorted = wb[order]
    vb_sorted = vb[order]
    # prefix max of value along increasing weight; remember the first argmax
    best_v = np.maximum.accumulate(vb_sorted)
    prev_max = np.concatenate(([np.int64(-1)], best_v[:-1]))
    is_new_peak = vb_sorted > prev_max
    peak_idx = np.where(is_new_peak, np.arange(len(order)), 0)
    peak_idx = np.maximum.accumulate(peak_idx)

    remaining = inst.capacity - wa
    ok = remaining >= 0
    pos = np.searchsorted(wb_sorted, remaining[ok], side="right") - 1
    totals = va[ok] + np.where(pos >= 0, best_v[np.clip(pos, 0, None)], 0)

    j = int(np.argmax(totals))
    best_value = int(totals[j])
    mask_a = int(np.flatnonzero(ok)[j])
    p = int(pos[j])
    mask_b = int(order[peak_idx[p]]) if p >= 0 else 0

    bits = np.zeros(n, dtype=np.int64)
    for i in range(half):
        bits[i] = (mask_a >> i) & 1
    for i in range(n - half):
        bits[half + i] = (mask_b >> i) & 1
    assert inst.weight_of(bits) <= inst.capacity
    assert inst.value_of(bits) == best_value
    return best_value, bits


def knapsack_greedy(inst: KnapsackInstance) -> tuple[int, np.ndarray]:
    """Density-ordered greedy lower bound.

    Scans items by descending value/weight ratio (ties: original index
    order) and takes each one that still fits.
    """
    values = np.asarray(inst.values, dtype=np.int64)
    weights = np.asarray(inst.weights, dtype=np.int64)
    ratio = values / weights
    order = np.argsort(-ratio, kind="stable")
    bits = np.zeros(inst.n, dtype=np.int64)
    room = inst.capacity
    for i in order:
        if weights[i] <= room:
            bits[i] = 1
            room -= int(weights[i])
    return inst.value_of(bits), bits


# -- GA hookup ----------------------------------------------------------


def repair_bits(inst: KnapsackInstance, bits) -> np.ndarray:
    """Make a selection feasible by dropping lowest-density items first.

    Deterministic: among the selected items sorted by ascending
    value/weight ratio (ties: original index order), the shortest prefix
    whose weight covers the overflow is dropped.
    """
    bits = np.asarray(bits, dtype=np.int64).copy()
    weights = np.asarray(inst.weights, dtype=np.int64)
    over = int(np.dot(bits, weights)) - inst.capacity
    if over <= 0:
        return bits
    values = np.asarray(inst.values, dtype=np.int64)
    selected = np.flatnonzero(bits)
    ratio = values[selected] / weights[selected]
    order = selected[np.argsort(ratio, kind="stable")]
    dropped_weight = np.cumsum(weights[order])
    k = int(np.searchsorted(dropped_weight, over, side="left")) + 1
    bits[order[:k]] = 0
    return bits


def knapsack_problem(inst: KnapsackInstance) -> Problem:
    """Maximization problem over item bitstrings with built-in repair.

    The objective decodes a raw bitstring by repairing it to feasibility,
    then returns the repaired total value, so every reported fitness
    corresponds to a feasible selection. Use ``repair_bits`` on a
    recorded best to recover that selection.
    """

    def objective(bits) -> float:
        return float(inst.value_of(repair_bits(inst, bits)))

    return Problem(
        objective=objective,
        encoding=Bitstring(inst.n),
        sense=ObjectiveSense.MAXIMIZE,
        name=f"knapsack-n{inst.n}",
        data=inst,
    )


# -- instance generation and I/O ----------------------------------------


def random_knapsack(n: int, tightness: float = 0.5, seed: int = 0) -> KnapsackInstance:
    """Uniform random instance: values/weights in 1..100, capacity set to
    ``ceil(tightness * total weight)``."""
    if n < 1:
        raise SchemaError(f"need at least one item, got n={n}")
    if not 0 < tightness <= 1:
        raise SchemaError(f"tightness must be in (0, 1], got {tightness}")
    rng = rng_stream(seed, INSTANCE_STREAM)
    values = rng.integers(1, 101, size=n)
    weights = rng.integers(1, 101, size=n)
    capacity = math.ceil(tightness * int(weights.sum()))
    return KnapsackInstance(tuple(int(v) for v in values), tuple(int(w) for w in weights), capacity)


def write_knapsack(inst: KnapsackInstance, path: str):
    """Plain text: first line ``n capacity``, then one ``value weight`` line per item."""
    with open(path, "w") as fh:
        fh.write(f"{inst.n} {inst.capacity}\n")
        for v, w in zip(inst.values, inst.weights):
            fh.write(f"{v} {w}\n")


def read_knapsack(path: str) -> KnapsackInstance:
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise SchemaError(f"{path}: expected a header line 'n capacity'")
    try:
        n, capacity = int(tokens[0]), int(tokens[1])
        rest = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise SchemaError(f"{path}: non-integer token ({exc})") from None
    if len(rest) != 2 * n:
        raise SchemaError(f"{path}: header says {n} items but found {len(rest) // 2}")
    values = tuple(rest[0::2])
    weights = tuple(rest[1::2])
    return KnapsackInstance(values, weights, capacity)
