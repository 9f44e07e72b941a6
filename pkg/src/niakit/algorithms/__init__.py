"""Population metaheuristics, registered under the uniform run driver."""

from ..core.encoding import Bitstring, MixedArray, Permutation, RealVector
from ..core.run import register_solver
from .aco import AcoParams, PheromoneMatrix, aco_run, aco_transition_probability, aco_update_pheromone
from .ba import BaParams, ba_run
from .foa import FoaParams, foa_run, sample_ball
from .ga import GaParams, ga_run, ga_step

register_solver("ga", ga_run, (Bitstring, Permutation, RealVector, MixedArray), GaParams)
register_solver("aco", aco_run, (Permutation,), AcoParams)
register_solver("foa", foa_run, (RealVector,), FoaParams)
register_solver("ba", ba_run, (RealVector,), BaParams)

__all__ = [
    "AcoParams",
    "BaParams",
    "FoaParams",
    "GaParams",
    "PheromoneMatrix",
    "aco_run",
    "aco_transition_probability",
    "aco_update_pheromone",
    "ba_run",
    "foa_run",
    "ga_run",
    "ga_step",
    "sample_ball",
]
