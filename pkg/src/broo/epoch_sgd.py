import logging
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily, ISoftmaxSampler
from src.core.exceptions import InvalidArgumentError
from src.core.models import BrooConvention, BrooQuery, EpochState, QueryLedger, SmoothingContext
from src.qsampler import ClassicalSoftmaxSampler, QuantumSoftmaxSampler
from src.smoothing import default_gradient_bound, gamma_stochastic_gradient
from .projection import project_two_balls
from .schedule import epoch_schedule, initial_domain, iteration_budget

logger = logging.getLogger(__name__)


EpochCallback = Callable[[EpochState], None]


def broo_tolerance(query: BrooQuery, convention: BrooConvention = BrooConvention.SQUARED) -> float:
    """
    Accuracy in regularized softmax value the BROO answer must reach.
    """
    match convention:
        case BrooConvention.SQUARED:
            return 0.5 * query.lam * query.accuracy ** 2
        case BrooConvention.LINEAR:
            return 0.5 * query.lam * query.accuracy
        case _:
            raise InvalidArgumentError(f"Unsupported BROO convention: {convention}")


def call_context(query: BrooQuery, ctx: SmoothingContext) -> SmoothingContext:
    """
    Smoothing context of one BROO call: ball B_radius(center) with the query's lambda.
    Rejects lambda above the c L_f / r band.
    """
    call_ctx = ctx.recentered(query.center, lam=query.lam, radius=query.radius)
    call_ctx.check_ball_parameter()
    if query.lam > call_ctx.c_ball * call_ctx.lipschitz / call_ctx.radius * (1.0 + 1e-9):
        raise InvalidArgumentError(
            f"lambda = {query.lam:.6g} exceeds c * L_f / r = {call_ctx.c_ball * call_ctx.lipschitz / call_ctx.radius:.6g}")
    return call_ctx


def epoch_sgd(family: IFunctionFamily,
              query: BrooQuery,
              ctx: SmoothingContext,
              ledger: QueryLedger,
              rng: np.random.Generator,
              sampler: ISoftmaxSampler,
              on_epoch: Optional[EpochCallback] = None) -> NDArray[np.float64]:
    """
    Epoch-SGD-Proj on the exponentiated softmax Gamma around query.center.

    All samples are drawn up front from the softmax at the center; each epoch runs
    projected SGD from its anchor inside B_r(center) ∩ B_{D_k}(anchor) and the average of
    its iterates becomes the next anchor.
    """
    call_ctx = call_context(query, ctx)
    constants = ledger.cost_constants
    center = call_ctx.center

    total = iteration_budget(query.lam, query.accuracy, query.failure_prob, call_ctx.lipschitz, constants.c_iters)
    batch = sampler.sample(family, center, total, query.failure_prob, call_ctx, ledger, rng)
    indices = batch.indices

    first_domain = initial_domain(default_gradient_bound(call_ctx), query.lam, total, query.failure_prob, constants.c_D)
    logger.debug("BROO call: %d iterations, D_1=%.4g, acceptance %.3f", total, first_domain, batch.acceptance_rate)

    anchor = center.copy()
    used = 0
    for k, length, eta, domain in epoch_schedule(total, query.lam, first_domain):
        if on_epoch is not None:
            on_epoch(EpochState(k=k, T_k=length, eta_k=eta, D_k=domain, anchor=anchor.copy()))

        x = anchor.copy()
        running = np.zeros_like(x)
        with ledger.phase("sgd"):
            for t in range(length):
                running += x
                g = gamma_stochastic_gradient(family, int(indices[used + t]), x, call_ctx, ledger)
                x = project_two_balls(x - eta * g, anchor, domain, center, call_ctx.radius)
        used += length
        anchor = running / length
        logger.debug("epoch %d: T=%d eta=%.4g D=%.4g", k, length, eta, domain)

    return anchor


def broo_solve(family: IFunctionFamily,
               query: BrooQuery,
               ctx: SmoothingContext,
               ledger: QueryLedger,
               rng: np.random.Generator,
               sampler: Optional[ISoftmaxSampler] = None,
               on_epoch: Optional[EpochCallback] = None) -> NDArray[np.float64]:
    """
    Ball regularized optimization oracle backed by the quantum softmax sampler.
    """
    if sampler is None:
        sampler = QuantumSoftmaxSampler()
    return epoch_sgd(family, query, ctx, ledger, rng, sampler, on_epoch)


def classical_broo_solve(family: IFunctionFamily,
                         query: BrooQuery,
                         ctx: SmoothingContext,
                         ledger: QueryLedger,
                         rng: np.random.Generator,
                         on_epoch: Optional[EpochCallback] = None) -> NDArray[np.float64]:
    """
    Same optimization path as broo_solve, sampling from weights computed with N value queries.
    """
    return epoch_sgd(family, query, ctx, ledger, rng, ClassicalSoftmaxSampler(), on_epoch)
