import math

import numpy as np
from numpy.typing import NDArray
from scipy.special import logsumexp

from src.core import IFunctionFamily
from src.core.exceptions import BallConstraintError
from src.core.models import QueryLedger, SmoothingContext
from src.problem import evaluate, evaluate_all, subgradient_all, subgradient_query
from .softmax import center_values_and_weights


def _check_ball(x: NDArray[np.float64], ctx: SmoothingContext) -> NDArray[np.float64]:
    x = np.asarray(x, dtype=np.float64)
    ctx.check_ball_parameter()
    distance = float(np.linalg.norm(x - ctx.center))
    if distance > ctx.radius * (1.0 + 1e-9) + 1e-12:
        raise BallConstraintError(distance, ctx.radius)
    return x


def _regularizer(x: NDArray[np.float64], ctx: SmoothingContext) -> float:
    return 0.5 * ctx.lam * float(np.sum((x - ctx.center) ** 2))


def gamma(family: IFunctionFamily, x: NDArray[np.float64], ctx: SmoothingContext, ledger: QueryLedger) -> float:
    """
    Exponentiated softmax sum_i p_i eps' exp((f_i^lam(x) - f_i^lam(x_bar)) / eps').
    """
    x = _check_ball(x, ctx)
    center_values, weights = center_values_and_weights(family, ctx.center, ctx, ledger)
    exponents = (evaluate_all(family, x, ledger) + _regularizer(x, ctx) - center_values) / ctx.epsilon_prime
    return float(ctx.epsilon_prime * math.exp(logsumexp(exponents, b=weights)))


def gamma_gradient_exact(family: IFunctionFamily,
                         x: NDArray[np.float64],
                         ctx: SmoothingContext,
                         ledger: QueryLedger) -> NDArray[np.float64]:
    """
    sum_i p_i exp(Delta_i / eps') grad f_i^lam(x) with grad f_i^lam(x) = grad f_i(x) + lam (x - x_bar).
    """
    x = _check_ball(x, ctx)
    center_values, weights = center_values_and_weights(family, ctx.center, ctx, ledger)
    exponents = (evaluate_all(family, x, ledger) + _regularizer(x, ctx) - center_values) / ctx.epsilon_prime
    scale = weights * np.exp(exponents)
    grads = subgradient_all(family, x, ledger)
    return scale @ grads + float(scale.sum()) * ctx.lam * (x - ctx.center)


def gamma_stochastic_gradient(family: IFunctionFamily,
                              i: int,
                              x: NDArray[np.float64],
                              ctx: SmoothingContext,
                              ledger: QueryLedger) -> NDArray[np.float64]:
    """
    One-sample estimator exp((f_i^lam(x) - f_i^lam(x_bar)) / eps') grad f_i^lam(x) for i ~ p.
    Charges two value queries and one gradient query.
    """
    x = _check_ball(x, ctx)
    delta = evaluate(family, i, x, ledger) + _regularizer(x, ctx) - evaluate(family, i, ctx.center, ledger)
    grad = subgradient_query(family, i, x, ledger) + ctx.lam * (x - ctx.center)
    return math.exp(delta / ctx.epsilon_prime) * grad


def gradient_bound(ctx: SmoothingContext) -> float:
    """
    G = exp(c + c^2/2) (L_f + lam r) with c = r L_f / eps'; valid while lam <= c L_f / r.
    """
    c = ctx.ball_parameter
    return math.exp(c + 0.5 * c * c) * (ctx.lipschitz + ctx.lam * ctx.radius)


def default_gradient_bound(ctx: SmoothingContext) -> float:
    """
    e^2 (L_f + lam r), the bound used to size the first Epoch-SGD-Proj domain.
    """
    return math.e ** 2 * (ctx.lipschitz + ctx.lam * ctx.radius)


def conversion_constant(c: float) -> float:
    """
    C = (1 + c + c^2) exp(c + c^2/2): Gamma suboptimality times C bounds the
    regularized softmax suboptimality.
    """
    return (1.0 + c + c * c) * math.exp(c + 0.5 * c * c)
