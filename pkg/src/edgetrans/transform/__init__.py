from .bipartite import improve_toward
from .ears import EarSubgraph, find_alternating_Cv_path, find_ear_subgraph, tail_from_ears
from .lemmas import (
    transform_cycle_cutvertex,
    transform_cycle_simple,
    transform_cycle_with_tail,
    transform_even_path,
    transform_odd_path,
)
from .runner import StepState, Trail, TrailRunner, run_algorithm
from .theorem import Move, TransformReport, check_inputs, transform, transform_report

__all__ = [
    "EarSubgraph", "Move", "StepState", "Trail", "TrailRunner", "TransformReport",
    "check_inputs", "find_alternating_Cv_path", "find_ear_subgraph", "improve_toward",
    "run_algorithm", "tail_from_ears", "transform", "transform_cycle_cutvertex",
    "transform_cycle_simple", "transform_cycle_with_tail", "transform_even_path",
    "transform_odd_path", "transform_report",
]
