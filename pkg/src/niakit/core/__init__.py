"""Shared problem/solution model, seeded RNG streams, and run control."""

from .encoding import (
    Bitstring,
    CandidateSolution,
    Encoding,
    IntSlot,
    MixedArray,
    Permutation,
    RealSlot,
    RealVector,
    to_plain,
    validate_solution,
)
from .rng import INSTANCE_STREAM, SOLVER_STREAM, rng_stream
from .run import (
    Budget,
    BudgetExhausted,
    ObjectiveSense,
    Problem,
    RunRecord,
    RunTracker,
    register_solver,
    run_optimizer,
)

__all__ = [
    "Bitstring",
    "Budget",
    "BudgetExhausted",
    "CandidateSolution",
    "Encoding",
    "INSTANCE_STREAM",
    "IntSlot",
    "MixedArray",
    "ObjectiveSense",
    "Permutation",
    "Problem",
    "RealSlot",
    "RealVector",
    "RunRecord",
    "RunTracker",
    "SOLVER_STREAM",
    "register_solver",
    "rng_stream",
    "run_optimizer",
    "to_plain",
    "validate_solution",
]
