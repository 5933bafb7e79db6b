from .reference import grid_minimize, minimize_on_ball, reference_minimum
from .subgradient import feasible_projection, subgradient_method
from .strategy import SimpleProximalStrategy, make_strategy
from .prox_outer import OuterSchedule, outer_schedule, prox_outer
from .solve import make_family, solve

__all__ = [
    "grid_minimize",
    "minimize_on_ball",
    "reference_minimum",
    "feasible_projection",
    "subgradient_method",
    "SimpleProximalStrategy",
    "make_strategy",
    "OuterSchedule",
    "outer_schedule",
    "prox_outer",
    "make_family",
    "solve",
]
