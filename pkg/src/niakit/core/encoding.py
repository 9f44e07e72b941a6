"""Search-space encodings and candidate solutions.

Four encoding kinds cover every solver in the toolkit: fixed-length
bitstrings, permutations, bounded real vectors, and mixed arrays whose
slots are either integer-ranged or real-bounded (the array form used
when structure and parameters are tuned together).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence, Union

import numpy as np


def _is_int(x) -> bool:
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def _is_real(x) -> bool:
    return isinstance(x, (int, float, np.integer, np.floating)) and not isinstance(x, bool)


@dataclass(frozen=True)
class Bitstring:
    """Fixed-length vector of 0/1 genes."""

    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"bitstring length must be >= 1, got {self.length}")

    def validate(self, value) -> bool:
        if not _is_sequence(value) or len(value) != self.length:
            return False
        return all(_is_int(v) and v in (0, 1) for v in value)

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, 2, size=self.length)


@dataclass(frozen=True)
class Permutation:
    """Orderings of indices 0..length-1, each appearing exactly once."""

    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"permutation length must be >= 1, got {self.length}")

    def validate(self, value) -> bool:
        if not _is_sequence(value) or len(value) != self.length:
            return False
        if not all(_is_int(v) for v in value):
            return False
        return sorted(int(v) for v in value) == list(range(self.length))

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.permutation(self.length)


@dataclass(frozen=True)
class RealVector:
    """Real vector with per-dimension closed bounds."""

    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self):
        bounds = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if len(bounds) < 1:
            raise ValueError("real vector needs at least one dimension")
        for lo, hi in bounds:
            if not lo < hi:
                raise ValueError(f"real bound must satisfy lower < upper, got ({lo}, {hi})")

    @property
    def length(self) -> int:
        return len(self.bounds)

    @property
    def lower(self) -> np.ndarray:
        return np.array([lo for lo, _ in self.bounds])

    @property
    def upper(self) -> np.ndarray:
        return np.array([hi for _, hi in self.bounds])

    @classmethod
    def cube(cls, dim: int, lo: float, hi: float) -> "RealVector":
        return cls(tuple((lo, hi) for _ in range(dim)))

    def validate(self, value) -> bool:
        if not _is_sequence(value) or len(value) != self.length:
            return False
        if not all(_is_real(v) for v in value):
            return False
        return all(lo <= float(v) <= hi for v, (lo, hi) in zip(value, self.bounds))

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.lower, self.upper)

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)


@dataclass(frozen=True)
class IntSlot:
    """Inclusive integer range for one mixed-array slot."""

    low: int
    high: int

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"empty integer range [{self.low}, {self.high}]")

    def validate(self, v) -> bool:
        return _is_int(v) and self.low <= v <= self.high

    def sample(self, rng: np.random.Generator):
        return int(rng.integers(self.low, self.high + 1))


@dataclass(frozen=True)
class RealSlot:
    """Closed real interval for one mixed-array slot."""

    low: float
    high: float

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError(f"real slot must satisfy lower < upper, got ({self.low}, {self.high})")

    def validate(self, v) -> bool:
        return _is_real(v) and self.low <= float(v) <= self.high

    def sample(self, rng: np.random.Generator):
        return float(rng.uniform(self.low, self.high))


Slot = Union[IntSlot, RealSlot]


@dataclass(frozen=True)
class MixedArray:
    """Heterogeneous array of integer-ranged and real-bounded slots."""

    slots: tuple[Slot, ...]

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        if len(self.slots) < 1:
            raise ValueError("mixed array needs at least one slot")

    @property
    def length(self) -> int:
        return len(self.slots)

    def validate(self, value) -> bool:
        if not _is_sequence(value) or len(value) != self.length:
            return False
        return all(slot.validate(v) for slot, v in zip(self.slots, value))

    def sample(self, rng: np.random.Generator) -> list:
        return [slot.sample(rng) for slot in self.slots]


Encoding = Union[Bitstring, Permutation, RealVector, MixedArray]


def _is_sequence(value) -> bool:
    if isinstance(value, np.ndarray):
        return value.ndim == 1
    return isinstance(value, Sequence) and not isinstance(value, (str, bytes))


@dataclass
class CandidateSolution:
    """A point in a search space, optionally carrying its objective value.

    Objectives are pure, so a set fitness is trusted: re-evaluating the
    same value yields the identical number.
    """

    value: Any
    fitness: float | None = None
    feasible: bool = True


def validate_solution(sol, encoding: Encoding) -> bool:
    """True iff the solution's value conforms to the encoding.

    Accepts a CandidateSolution or a raw value. Never raises: any shape,
    type, bound, or permutation violation simply returns False.
    """
    value = sol.value if isinstance(sol, CandidateSolution) else sol
    try:
        return encoding.validate(value)
    except (TypeError, ValueError):
        return False


def to_plain(value) -> list:
    """Copy an encoded value into plain Python scalars (for records/JSON)."""
    if isinstance(value, np.ndarray):
        return value.tolist()
    out = []
    for v in value:
        if isinstance(v, np.integer):
            out.append(int(v))
        elif isinstance(v, np.floating):
            out.append(float(v))
        else:
            out.append(v)
    return out
