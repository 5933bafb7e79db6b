from .chain import (
    chain_alpha,
    chain_anchor,
    psi,
    psi_derivative,
    chain_values,
    chain_gradients,
    hard_value,
    hard_gradient,
    prog,
    suboptimality_floor,
    progress_gap,
    zero_point,
)
from .instance import (
    ShuffledHardFamily,
    ScaledHardFamily,
    haar_columns,
    make_shuffled_instance,
    required_dimension,
    guess_success_bound,
    scaled_chain_length,
    scaled_hard_family,
)
from .progress import (
    TRACE_HEADER,
    ProgressRecorder,
    GuessingArm,
    SubgradientArm,
    make_progress_arm,
    run_progress_experiment,
    guess_rate,
    write_trace_csv,
)
from .zero_chain import check_zero_chain

__all__ = [
    "chain_alpha",
    "chain_anchor",
    "psi",
    "psi_derivative",
    "chain_values",
    "chain_gradients",
    "hard_value",
    "hard_gradient",
    "prog",
    "suboptimality_floor",
    "progress_gap",
    "zero_point",
    "ShuffledHardFamily",
    "ScaledHardFamily",
    "haar_columns",
    "make_shuffled_instance",
    "required_dimension",
    "guess_success_bound",
    "scaled_chain_length",
    "scaled_hard_family",
    "TRACE_HEADER",
    "ProgressRecorder",
    "GuessingArm",
    "SubgradientArm",
    "make_progress_arm",
    "run_progress_experiment",
    "guess_rate",
    "write_trace_csv",
    "check_zero_chain",
]
