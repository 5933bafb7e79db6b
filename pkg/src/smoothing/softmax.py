from typing import Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.special import logsumexp, softmax

from src.core import IFunctionFamily
from src.core.models import QueryLedger, SmoothingContext
from src.problem import evaluate_all


def f_max(family: IFunctionFamily, x: NDArray[np.float64], ledger: QueryLedger) -> float:
    return float(np.max(evaluate_all(family, x, ledger)))


def f_smax(family: IFunctionFamily, x: NDArray[np.float64], ctx: SmoothingContext, ledger: QueryLedger) -> float:
    """
    eps' * log sum_i exp(f_i(x) / eps'), max-shifted.
    """
    values = evaluate_all(family, x, ledger)
    return smax_of_values(values, ctx.epsilon_prime)


def f_smax_reg(family: IFunctionFamily, x: NDArray[np.float64], ctx: SmoothingContext, ledger: QueryLedger) -> float:
    x = np.asarray(x, dtype=np.float64)
    return f_smax(family, x, ctx, ledger) + 0.5 * ctx.lam * float(np.sum((x - ctx.center) ** 2))


def smax_of_values(values: NDArray[np.float64], epsilon_prime: float) -> float:
    return float(epsilon_prime * logsumexp(np.asarray(values) / epsilon_prime))


def softmax_of_values(values: NDArray[np.float64], epsilon_prime: float) -> NDArray[np.float64]:
    weights = softmax(np.asarray(values) / epsilon_prime)
    return weights / weights.sum()


def center_values_and_weights(family: IFunctionFamily,
                              center: NDArray[np.float64],
                              ctx: SmoothingContext,
                              ledger: QueryLedger) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Values f_i(center) and softmax weights p_i, charged once per (family, center) and
    context; later calls are served from the context cache.
    """
    center = np.asarray(center, dtype=np.float64)
    key = (id(family), center.tobytes())
    cached = ctx.cached_weights(key)
    if cached is None:
        values = evaluate_all(family, center, ledger)
        cached = (values, softmax_of_values(values, ctx.epsilon_prime))
        ctx.store_weights(key, *cached)
    return cached


def softmax_weights(family: IFunctionFamily,
                    center: NDArray[np.float64],
                    ctx: SmoothingContext,
                    ledger: QueryLedger) -> NDArray[np.float64]:
    """
    p_i = exp(f_i(center)/eps') / sum_j exp(f_j(center)/eps'); charges N value queries
    the first time a context sees this center.
    """
    return center_values_and_weights(family, center, ctx, ledger)[1].copy()
