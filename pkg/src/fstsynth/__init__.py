"""Exact minimal single-output transducer synthesis from input-output
pairs, plus the classical trie + partition-refinement baseline."""

from .core import (
    TaskSpec,
    Trajectory,
    Transducer,
    VerifyReport,
    defined_map_count,
    prune,
    relabel,
    run,
    totalize,
    trajectory,
    verify,
)
from .synth_table import (
    SearchConfig,
    SearchOutcome,
    lower_bound,
    search_space_size,
    synthesize_at,
    synthesize_minimal,
    variable_count,
)
from .synth_traj import synthesize_at_traj, trajectory_variable_count
from .trie import build_trie, minimize

__all__ = [
    "TaskSpec",
    "Trajectory",
    "Transducer",
    "VerifyReport",
    "SearchConfig",
    "SearchOutcome",
    "build_trie",
    "defined_map_count",
    "lower_bound",
    "minimize",
    "prune",
    "relabel",
    "run",
    "search_space_size",
    "synthesize_at",
    "synthesize_at_traj",
    "synthesize_minimal",
    "totalize",
    "trajectory",
    "trajectory_variable_count",
    "variable_count",
    "verify",
]
