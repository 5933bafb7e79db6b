import math
import time

import numpy as np
from numpy.typing import NDArray

from src.broo import project_two_balls
from src.core import IFunctionFamily
from src.core.exceptions import InvalidArgumentError
from src.core.models import QueryLedger, SolveReport
from src.problem import evaluate_all, subgradient_query
from .reference import reference_minimum


def feasible_projection(family: IFunctionFamily,
                        y: NDArray[np.float64],
                        start: NDArray[np.float64],
                        radius: float) -> NDArray[np.float64]:
    """
    Projection onto B_R(x0) ∩ domain ball, ending in B_R(x0).
    """
    return project_two_balls(y, family.domain_center, family.domain_radius, start, radius)


def finish_report(family: IFunctionFamily,
                  point: NDArray[np.float64],
                  start: NDArray[np.float64],
                  radius: float,
                  ledger: QueryLedger,
                  iterations: int,
                  started: float,
                  method: str) -> SolveReport:
    objective = float(np.max(family.values(point)))
    reference = reference_minimum(family, start, radius)
    return SolveReport(output_point=point,
                       suboptimality_estimate=None if reference is None else objective - reference,
                       ledger_snapshot=ledger.snapshot(),
                       iterations=iterations,
                       wall_time=time.perf_counter() - started,
                       method=method,
                       objective_value=objective,
                       reference_value=reference)


def subgradient_method(family: IFunctionFamily,
                       start: NDArray[np.float64],
                       radius: float,
                       epsilon: float,
                       ledger: QueryLedger) -> SolveReport:
    """
    Projected subgradient on F_max with T = ceil((L_f R / eps)^2) steps of size
    R / (L_f sqrt(T)); returns the average iterate. Each step charges N value queries to
    find the active function and one gradient query.
    """
    if epsilon <= 0 or radius <= 0:
        raise InvalidArgumentError("epsilon and R must be positive")

    started = time.perf_counter()
    start = np.asarray(start, dtype=np.float64)
    steps = max(1, math.ceil((family.lipschitz * radius / epsilon) ** 2 - 1e-9))
    eta = radius / (family.lipschitz * math.sqrt(steps))

    x = feasible_projection(family, start, start, radius)
    running = np.zeros_like(x)
    for _ in range(steps):
        running += x
        with ledger.phase("argmax"):
            active = int(np.argmax(evaluate_all(family, x, ledger)))
        with ledger.phase("gradient"):
            g = subgradient_query(family, active, x, ledger)
        x = feasible_projection(family, x - eta * g, start, radius)

    return finish_report(family, running / steps, start, radius, ledger, steps, started, "subgradient")
