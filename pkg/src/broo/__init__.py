from .schedule import FIRST_EPOCH_LENGTH, iteration_budget, initial_domain, epoch_schedule
from .projection import project_ball, project_two_balls
from .epoch_sgd import broo_tolerance, call_context, epoch_sgd, broo_solve, classical_broo_solve

__all__ = [
    "FIRST_EPOCH_LENGTH",
    "iteration_budget",
    "initial_domain",
    "epoch_schedule",
    "project_ball",
    "project_two_balls",
    "broo_tolerance",
    "call_context",
    "epoch_sgd",
    "broo_solve",
    "classical_broo_solve",
]
