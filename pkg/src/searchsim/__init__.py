from .instance import make_search_instance, f_search, search_table
from .simulator import (
    check_size,
    initial_state,
    apply_search_oracle,
    identity_step,
    hadamard,
    uniform_item,
    diffusion,
    key_copy,
    phase_on_nonzero_result,
    matrix_step,
    apply_adversary_step,
    measure_register,
    key_overlap,
    expected_key_overlap,
)
from .chained import DEFAULT_CAP, grover_iterations, run_round, run_chained_grover

__all__ = [
    "make_search_instance",
    "f_search",
    "search_table",
    "check_size",
    "initial_state",
    "apply_search_oracle",
    "identity_step",
    "hadamard",
    "uniform_item",
    "diffusion",
    "key_copy",
    "phase_on_nonzero_result",
    "matrix_step",
    "apply_adversary_step",
    "measure_register",
    "key_overlap",
    "expected_key_overlap",
    "DEFAULT_CAP",
    "grover_iterations",
    "run_round",
    "run_chained_grover",
]
