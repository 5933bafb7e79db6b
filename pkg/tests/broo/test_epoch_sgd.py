import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.broo import broo_solve, broo_tolerance, call_context, classical_broo_solve, iteration_budget
from src.core.exceptions import InvalidArgumentError
from src.core.models import BrooConvention, BrooQuery, CostConstants, QueryLedger, SmoothingContext
from src.problem import make_affine_family
from src.smoothing import smax_of_values
from src.solver import minimize_on_ball


# -------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------

def _setup(c_iters: float = 16.0):
    family = make_affine_family(seed=3, n_functions=8, dim=2, lipschitz=1.0, radius=1.0)
    ctx = SmoothingContext.create(0.5, family.n_functions, family.lipschitz, np.zeros(2))
    query = BrooQuery(center=np.array([0.1, -0.05]),
                      lam=0.9 * family.lipschitz / ctx.radius,
                      accuracy=0.1,
                      failure_prob=0.05,
                      radius=ctx.radius)
    return family, ctx, query, CostConstants(c_iters=c_iters)


def _regularized(family, ctx, query):
    def fn(x):
        return smax_of_values(family.values(x), ctx.epsilon_prime) + 0.5 * query.lam * float(np.sum((x - query.center) ** 2))
    return fn


class TestBrooSolve:
    """
    Unit tests src/broo/epoch_sgd.py :
    1. Oracle contract
        1a. Regularized softmax gap <= lambda delta^2 / 2 in at least 45 of 50 seeded runs
        1b. Output stays inside B_r(center)
        1c. Budget spanning several epochs still meets the gap in at least 27 of 30 runs
    2. Epoch mechanics
        2a. Budget below 450 -> one epoch of the whole budget, reported through on_epoch
        2b. Charges split into "sampling" and "sgd"; sgd charges 3 per iteration
        2c. Longer budgets double T, halve eta, shrink D by sqrt(2) and move the anchor
    3. Arms
        3a. Quantum and classical oracles follow the same path for the same generator
    4. Arguments
        4a. lambda above c L_f / r -> argument error
        4b. Tolerance conventions: squared lambda delta^2 / 2, linear lambda delta / 2
    """

    def test_contract_1a(self):
        family, ctx, query, constants = _setup()
        fn = _regularized(family, ctx, query)
        _, best = minimize_on_ball(fn, query.center, query.radius)
        tolerance = broo_tolerance(query)

        hits = 0
        for run in range(50):
            x = broo_solve(family, query, ctx, QueryLedger(cost_constants=constants), np.random.default_rng(run))
            hits += fn(x) - best <= tolerance
        assert hits >= 45

    def test_contract_1b(self):
        family, ctx, query, constants = _setup()
        x = broo_solve(family, query, ctx, QueryLedger(cost_constants=constants), np.random.default_rng(1))
        assert np.linalg.norm(x - query.center) <= query.radius + 1e-9

    def test_contract_1c(self):
        family, ctx, query, constants = _setup(c_iters=400.0)
        fn = _regularized(family, ctx, query)
        _, best = minimize_on_ball(fn, query.center, query.radius)
        tolerance = broo_tolerance(query)

        hits = 0
        for run in range(30):
            states = []
            x = broo_solve(family, query, ctx, QueryLedger(cost_constants=constants), np.random.default_rng(run),
                           on_epoch=states.append)
            assert len(states) >= 2
            hits += fn(x) - best <= tolerance
        assert hits >= 27

    def test_epochs_2a(self):
        family, ctx, query, constants = _setup()
        total = iteration_budget(query.lam, query.accuracy, query.failure_prob, family.lipschitz, constants.c_iters)
        assert total < 450
        states = []
        broo_solve(family, query, ctx, QueryLedger(cost_constants=constants), np.random.default_rng(0),
                   on_epoch=states.append)
        assert len(states) == 1
        assert states[0].T_k == total
        assert states[0].eta_k == pytest.approx(1.0 / (3.0 * query.lam))
        np.testing.assert_allclose(states[0].anchor, query.center)

    def test_epochs_2b(self):
        family, ctx, query, constants = _setup()
        total = iteration_budget(query.lam, query.accuracy, query.failure_prob, family.lipschitz, constants.c_iters)
        ledger = QueryLedger(cost_constants=constants)
        broo_solve(family, query, ctx, ledger, np.random.default_rng(0))
        assert set(ledger.phase_charges) == {"sampling", "sgd"}
        assert ledger.phase_charges["sgd"] == 3 * total

    def test_epochs_2c(self):
        family, ctx, query, constants = _setup(c_iters=400.0)
        total = iteration_budget(query.lam, query.accuracy, query.failure_prob, family.lipschitz, constants.c_iters)
        ledger = QueryLedger(cost_constants=constants)
        states = []
        broo_solve(family, query, ctx, ledger, np.random.default_rng(0), on_epoch=states.append)

        assert len(states) >= 2
        assert sum(s.T_k for s in states) <= total
        assert states[0].T_k == 450
        np.testing.assert_allclose(states[0].anchor, query.center)
        for previous, current in zip(states, states[1:]):
            assert current.k == previous.k + 1
            assert current.T_k == 2 * previous.T_k
            assert current.eta_k == pytest.approx(previous.eta_k / 2.0)
            assert current.D_k == pytest.approx(previous.D_k / np.sqrt(2.0))
        assert not np.allclose(states[1].anchor, query.center)
        assert np.linalg.norm(states[1].anchor - query.center) <= query.radius + 1e-9
        assert ledger.phase_charges["sgd"] == 3 * sum(s.T_k for s in states)

    def test_arms_3a(self):
        family, ctx, query, constants = _setup()
        quantum = broo_solve(family, query, ctx, QueryLedger(cost_constants=constants), np.random.default_rng(8))
        classical = classical_broo_solve(family, query, ctx, QueryLedger(cost_constants=constants),
                                         np.random.default_rng(8))
        np.testing.assert_array_equal(quantum, classical)

    def test_arguments_4a(self):
        family, ctx, query, _ = _setup()
        too_strong = BrooQuery(center=query.center, lam=2.0 * family.lipschitz / ctx.radius,
                               accuracy=0.1, failure_prob=0.05, radius=ctx.radius)
        with pytest.raises(InvalidArgumentError):
            call_context(too_strong, ctx)

    def test_arguments_4b(self):
        query = BrooQuery(center=np.zeros(2), lam=4.0, accuracy=0.5, failure_prob=0.1, radius=0.1)
        assert broo_tolerance(query) == pytest.approx(0.5)
        assert broo_tolerance(query, BrooConvention.LINEAR) == pytest.approx(1.0)
