import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.core.exceptions import BallConstraintError, InvalidArgumentError
from src.core.models import QueryLedger, SmoothingContext
from src.problem import make_affine_family
from src.smoothing import (
    conversion_constant,
    default_gradient_bound,
    f_max,
    f_smax,
    gamma,
    gamma_gradient_exact,
    gamma_stochastic_gradient,
    gradient_bound,
    smax_of_values,
    softmax_of_values,
    softmax_weights,
)


# -------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------

def _family(n: int = 16, dim: int = 3, seed: int = 7):
    return make_affine_family(seed=seed, n_functions=n, dim=dim, lipschitz=1.0, radius=1.0)


def _ctx(family, epsilon: float = 0.5, lam: float = 0.3, center=None) -> SmoothingContext:
    center = np.zeros(family.dim) if center is None else center
    return SmoothingContext.create(epsilon, family.n_functions, family.lipschitz, center, lam=lam)


class TestSoftmax:
    """
    Unit tests src/smoothing/softmax.py :
    1. Approximation
        1a. F_max <= F_smax <= F_max + eps / 2 at random points
        1b. Huge values do not overflow (max shift)
    2. Weights
        2a. Weights are positive and sum to one
        2b. Second request inside one context is not charged again
        2c. A recentered context charges the new center once
    3. Context
        3a. eps' = eps / (2 ln N)
        3b. N = 1 -> argument error
    """

    def test_approximation_1a(self):
        family = _family()
        ctx = _ctx(family, epsilon=0.2)
        rng = np.random.default_rng(3)
        for _ in range(20):
            x = rng.uniform(-0.5, 0.5, size=family.dim)
            hard = f_max(family, x, QueryLedger())
            soft = f_smax(family, x, ctx, QueryLedger())
            assert hard - 1e-12 <= soft <= hard + 0.1 + 1e-12

    def test_approximation_1b(self):
        value = smax_of_values(np.array([1000.0, 1000.0]), 0.01)
        assert value == pytest.approx(1000.0 + 0.01 * math.log(2.0))
        weights = softmax_of_values(np.array([1e4, 0.0, -1e4]), 0.01)
        np.testing.assert_allclose(weights, [1.0, 0.0, 0.0], atol=1e-300)

    def test_weights_2a(self):
        family = _family()
        weights = softmax_weights(family, np.zeros(family.dim), _ctx(family), QueryLedger())
        assert np.all(weights > 0)
        assert weights.sum() == pytest.approx(1.0, abs=1e-12)

    def test_weights_2b(self):
        family = _family()
        ctx = _ctx(family)
        ledger = QueryLedger()
        softmax_weights(family, ctx.center, ctx, ledger)
        softmax_weights(family, ctx.center, ctx, ledger)
        assert ledger.value_queries == family.n_functions

    def test_weights_2c(self):
        family = _family()
        ctx = _ctx(family)
        ledger = QueryLedger()
        softmax_weights(family, ctx.center, ctx, ledger)
        moved = ctx.recentered(np.full(family.dim, 0.1))
        softmax_weights(family, moved.center, moved, ledger)
        softmax_weights(family, moved.center, moved, ledger)
        assert ledger.value_queries == 2 * family.n_functions

    def test_context_3a(self):
        ctx = SmoothingContext.create(0.4, 64, 1.0, np.zeros(2))
        assert ctx.epsilon_prime == pytest.approx(0.4 / (2.0 * math.log(64)))
        assert ctx.ball_parameter == pytest.approx(1.0)

    def test_context_3b(self):
        with pytest.raises(InvalidArgumentError):
            SmoothingContext.create(0.4, 1, 1.0, np.zeros(2))


class TestGamma:
    """
    Unit tests src/smoothing/gamma.py :
    1. Gamma
        1a. At the center Gamma = eps'
        1b. Outside the ball -> BallConstraintError
    2. Gradients
        2a. Sum over i of p_i times the one-sample estimator equals the exact gradient
        2b. Every one-sample estimator is bounded by G on the ball
        2c. The one-sample estimator charges two values and one gradient
    3. Constants
        3a. C(1) = 3 e^{3/2}
        3b. With c = 1, G equals e^{3/2} (L_f + lam r) and the default bound is e^2 (L_f + lam r)
    """

    def test_gamma_1a(self):
        family = _family()
        ctx = _ctx(family)
        assert gamma(family, ctx.center, ctx, QueryLedger()) == pytest.approx(ctx.epsilon_prime)

    def test_gamma_1b(self):
        family = _family()
        ctx = _ctx(family)
        far = ctx.center + np.r_[2.0 * ctx.radius, np.zeros(family.dim - 1)]
        with pytest.raises(BallConstraintError):
            gamma(family, far, ctx, QueryLedger())

    def test_gradients_2a(self):
        family = _family()
        ctx = _ctx(family)
        x = ctx.center + 0.5 * ctx.radius * np.ones(family.dim) / math.sqrt(family.dim)
        ledger = QueryLedger()
        weights = softmax_weights(family, ctx.center, ctx, ledger)
        estimate = sum(weights[i] * gamma_stochastic_gradient(family, i, x, ctx, ledger)
                       for i in range(family.n_functions))
        exact = gamma_gradient_exact(family, x, ctx, ledger)
        np.testing.assert_allclose(estimate, exact, rtol=1e-10, atol=1e-12)

    def test_gradients_2b(self):
        family = _family()
        ctx = _ctx(family)
        bound = gradient_bound(ctx)
        rng = np.random.default_rng(11)
        for _ in range(10):
            direction = rng.standard_normal(family.dim)
            x = ctx.center + ctx.radius * rng.uniform() * direction / np.linalg.norm(direction)
            for i in range(family.n_functions):
                g = gamma_stochastic_gradient(family, i, x, ctx, QueryLedger())
                assert np.linalg.norm(g) <= bound * (1.0 + 1e-9)

    def test_gradients_2c(self):
        family = _family()
        ctx = _ctx(family)
        ledger = QueryLedger()
        gamma_stochastic_gradient(family, 0, ctx.center, ctx, ledger)
        assert (ledger.value_queries, ledger.gradient_queries) == (2, 1)

    def test_constants_3a(self):
        assert conversion_constant(1.0) == pytest.approx(3.0 * math.exp(1.5))

    def test_constants_3b(self):
        family = _family()
        ctx = _ctx(family, lam=0.3)
        assert gradient_bound(ctx) == pytest.approx(math.exp(1.5) * (1.0 + 0.3 * ctx.radius))
        assert default_gradient_bound(ctx) == pytest.approx(math.e ** 2 * (1.0 + 0.3 * ctx.radius))
