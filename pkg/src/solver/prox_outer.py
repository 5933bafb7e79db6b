import logging
import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily, IOuterStrategy
from src.core.exceptions import InvalidArgumentError
from src.core.models import BrooQuery, QueryLedger, SmoothingContext, SolveReport
from src.smoothing import smax_of_values
from src.utils import stream
from .strategy import SimpleProximalStrategy
from .subgradient import feasible_projection, finish_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OuterSchedule:
    """
    Parameters of the proximal outer loop for one problem instance.
    """
    ball_radius: float
    lam: float
    accuracy: float
    max_calls: int
    failure_prob: float


def outer_schedule(family: IFunctionFamily, radius: float, epsilon: float, ledger: QueryLedger) -> OuterSchedule:
    """
    r = c_ball eps / (2 L_f ln N), lambda = eps / (r R) (capped at c_ball L_f / r),
    delta = c_delta eps / (lambda R), at most ceil(2R / r) + 1 calls with
    sigma = 1 / (6 calls).
    """
    constants = ledger.cost_constants
    ball_radius = constants.c_ball * epsilon / (2.0 * family.lipschitz * math.log(family.n_functions))
    lam = min(epsilon / (ball_radius * radius), constants.c_ball * family.lipschitz / ball_radius)
    accuracy = constants.c_delta * epsilon / (lam * radius)
    max_calls = math.ceil(2.0 * radius / ball_radius) + 1
    return OuterSchedule(ball_radius=ball_radius,
                         lam=lam,
                         accuracy=accuracy,
                         max_calls=max_calls,
                         failure_prob=1.0 / (6.0 * max_calls))


def prox_outer(family: IFunctionFamily,
               start: NDArray[np.float64],
               radius: float,
               epsilon: float,
               ledger: QueryLedger,
               strategy: Optional[IOuterStrategy] = None,
               seed: int = 0,
               trial: int = 0) -> SolveReport:
    """
    Repeatedly asks the ball oracle for the regularized softmax minimizer around the
    current center and moves there. Stops once a move is shorter than r/2; running out of
    calls first sets budget_exhausted. The returned point is the best one seen by F_smax.

    Oracle call j samples from stream(seed, trial, j, "sampling").
    """
    if epsilon <= 0 or radius <= 0:
        raise InvalidArgumentError("epsilon and R must be positive")
    if strategy is None:
        strategy = SimpleProximalStrategy()

    started = time.perf_counter()
    start = np.asarray(start, dtype=np.float64)
    schedule = outer_schedule(family, radius, epsilon, ledger)
    ctx = SmoothingContext.create(epsilon,
                                  family.n_functions,
                                  family.lipschitz,
                                  start,
                                  radius=schedule.ball_radius,
                                  c_ball=ledger.cost_constants.c_ball)

    def surrogate(x: NDArray[np.float64]) -> float:
        return smax_of_values(family.values(x), ctx.epsilon_prime)

    center = feasible_projection(family, start, start, radius)
    best, best_value = center, surrogate(center)
    converged = False
    calls = 0
    for call in range(schedule.max_calls):
        query = BrooQuery(center=center,
                          lam=schedule.lam,
                          accuracy=schedule.accuracy,
                          failure_prob=schedule.failure_prob,
                          radius=schedule.ball_radius)
        answer = strategy.next_center(family, query, ctx, ledger, stream(seed, trial, call, "sampling"))
        answer = feasible_projection(family, answer, start, radius)
        calls += 1

        movement = float(np.linalg.norm(answer - center))
        center = answer
        value = surrogate(center)
        if value < best_value:
            best, best_value = center, value
        logger.info("outer call %d: moved %.4g, F_smax %.6g", call, movement, value)

        if movement < schedule.ball_radius / 2.0:
            converged = True
            break

    report = finish_report(family, best, start, radius, ledger, calls, started, "prox_outer")
    report.budget_exhausted = not converged
    if not converged:
        logger.warning("prox_outer used all %d oracle calls without settling", schedule.max_calls)
    return report
