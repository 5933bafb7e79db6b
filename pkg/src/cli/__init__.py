from .commands import cmd_solve, cmd_bench_sampler, cmd_bench_scaling, cmd_hardness, cmd_searchsim
from .runner import run_trials, trial_seed, loglog_fit

__all__ = [
    "cmd_solve",
    "cmd_bench_sampler",
    "cmd_bench_scaling",
    "cmd_hardness",
    "cmd_searchsim",
    "run_trials",
    "trial_seed",
    "loglog_fit",
]
