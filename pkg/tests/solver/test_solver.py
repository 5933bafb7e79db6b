import math
import os
import sys
import warnings

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.broo import broo_solve, iteration_budget
from src.core.exceptions import ConfigError, ClippedScaleWarning, InvalidArgumentError
from src.core.models import BrooQuery, ExperimentConfig, QueryLedger, SmoothingContext
from src.problem import make_affine_family, make_symmetric_affine_family
from src.solver import (
    grid_minimize,
    make_family,
    make_strategy,
    outer_schedule,
    solve,
    subgradient_method,
)
from src.utils import read_json


# -------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------

def _config(**overrides) -> ExperimentConfig:
    data = {
        "method": "prox_outer",
        "epsilon": 0.5,
        "instance": {"family": "symmetric_affine", "dim": 2, "radius": 1.0, "start": [0.5, 0.0]},
    }
    data.update(overrides)
    return ExperimentConfig.from_dict(data)


class TestOuterSchedule:
    """
    Unit tests src/solver/prox_outer.py (schedule) :
    1. Constants
        1a. N = 8, eps = 1/2, L_f = R = 1: r, lambda, delta, call budget and sigma
        1b. lambda is capped at c L_f / r when eps / (r R) would exceed it
    """

    def test_constants_1a(self):
        family = make_affine_family(seed=0, n_functions=8, dim=2, lipschitz=1.0, radius=1.0)
        schedule = outer_schedule(family, 1.0, 0.5, QueryLedger())
        r = 0.5 / (2.0 * math.log(8))
        assert schedule.ball_radius == pytest.approx(r)
        assert schedule.lam == pytest.approx(0.5 / r)
        assert schedule.accuracy == pytest.approx(0.5 / (schedule.lam * 1.0))
        assert schedule.max_calls == math.ceil(2.0 / r) + 1
        assert schedule.failure_prob == pytest.approx(1.0 / (6.0 * schedule.max_calls))

    def test_constants_1b(self):
        family = make_affine_family(seed=0, n_functions=8, dim=2, lipschitz=1.0, radius=1.0)
        schedule = outer_schedule(family, 0.1, 0.5, QueryLedger())
        assert schedule.lam == pytest.approx(1.0 / schedule.ball_radius)


class TestSubgradientMethod:
    """
    Unit tests src/solver/subgradient.py :
    1. Accuracy
        1a. |x_1| from x0 = (0.5, 0) with eps = 0.1 ends within eps of the minimum
    2. Charging
        2a. T = ceil((L_f R / eps)^2) steps, N value queries and one gradient query each
    3. Reference grid
        3a. d = 3 -> argument error
    """

    def test_accuracy_1a(self):
        family = make_symmetric_affine_family(dim=2, lipschitz=1.0, radius=1.0)
        report = subgradient_method(family, np.array([0.5, 0.0]), 1.0, 0.1, QueryLedger())
        assert report.suboptimality_estimate is not None
        assert report.suboptimality_estimate <= 0.1

    def test_charging_2a(self):
        family = make_symmetric_affine_family(dim=2, lipschitz=1.0, radius=1.0)
        ledger = QueryLedger()
        report = subgradient_method(family, np.zeros(2), 1.0, 0.1, ledger)
        assert report.iterations == 100
        assert ledger.phase_charges == {"argmax": 200, "gradient": 100}

    def test_grid_3a(self):
        with pytest.raises(InvalidArgumentError):
            grid_minimize(lambda x: 0.0, np.zeros(3), 1.0)


class TestProxOuter:
    """
    Unit tests src/solver/prox_outer.py & src/solver/solve.py :
    1. End to end
        1a. Symmetric affine pair from x0 = (0.5, 0): eps-optimal in at least 20 of 30 seeds
        1b. Scaled hard family (T = 3, clipped dimension): eps-optimal in at least 20 of 30 seeds
        1c. Building the scaled hard family warns that the dimension was clipped
    2. Arms
        2a. N = 2^14: classical charge at least 4x the quantum charge on the same path
        2b. One oracle call costs O(sqrt(N T) ln(1/sigma) + T) under the quantum model
    3. Configuration
        3a. scaled_hard without smoothness -> ConfigError(instance.smoothness)
        3b. start of the wrong length -> ConfigError(instance.start)
        3c. accelerated strategy is rejected
    4. Reports
        4a. report.json for trial 0, report_<trial>.json otherwise, with config echo
    """

    def test_end_to_end_1a(self):
        hits = 0
        for seed in range(30):
            report = solve(_config(seed=seed))
            hits += report.suboptimality_estimate <= 0.5
        assert hits >= 20

    def test_end_to_end_1b(self):
        config = _config(epsilon=0.2,
                         instance={"family": "scaled_hard", "n_functions": 8, "lipschitz": 1.0,
                                   "smoothness": 400.0, "radius": 1.0, "d_cap": 20, "seed": 5})
        hits = 0
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ClippedScaleWarning)
            for seed in range(30):
                report = solve(config.with_overrides(seed=seed))
                hits += report.suboptimality_estimate is not None and report.suboptimality_estimate <= 0.2
        assert hits >= 20

    def test_end_to_end_1c(self):
        config = _config(epsilon=0.2,
                         instance={"family": "scaled_hard", "n_functions": 8, "smoothness": 400.0, "d_cap": 20})
        with pytest.warns(ClippedScaleWarning):
            family, start = make_family(config.instance, config.epsilon)
        assert family.base.instance.chain_len == 3
        assert family.dim == 20
        np.testing.assert_array_equal(start, np.zeros(20))

    def test_arms_2a(self):
        base = {"epsilon": 0.9, "instance": {"family": "affine", "n_functions": 2 ** 14, "dim": 2, "seed": 1}}
        quantum = solve(_config(**base, arm="quantum"))
        classical = solve(_config(**base, arm="classical"))
        np.testing.assert_array_equal(quantum.output_point, classical.output_point)
        assert classical.ledger_snapshot.quantum_charged >= 4 * quantum.ledger_snapshot.quantum_charged

    def test_arms_2b(self):
        for n in (2 ** 8, 2 ** 10, 2 ** 12):
            family = make_affine_family(seed=2, n_functions=n, dim=2, lipschitz=1.0, radius=1.0)
            ledger = QueryLedger()
            schedule = outer_schedule(family, 1.0, 0.5, ledger)
            ctx = SmoothingContext.create(0.5, n, 1.0, np.zeros(2), radius=schedule.ball_radius)
            query = BrooQuery(center=np.zeros(2), lam=schedule.lam, accuracy=schedule.accuracy,
                              failure_prob=schedule.failure_prob, radius=schedule.ball_radius)
            broo_solve(family, query, ctx, ledger, np.random.default_rng(0))
            total = iteration_budget(query.lam, query.accuracy, query.failure_prob, 1.0)
            formula = math.sqrt(n * total) * math.log(1.0 / query.failure_prob) + 3 * total
            assert ledger.quantum_charged <= 3.0 * formula

    def test_config_3a(self):
        config = _config(instance={"family": "scaled_hard"})
        with pytest.raises(ConfigError) as info:
            make_family(config.instance, config.epsilon)
        assert info.value.key == "instance.smoothness"

    def test_config_3b(self):
        config = _config(instance={"family": "symmetric_affine", "dim": 2, "start": [0.0, 0.0, 0.0]})
        with pytest.raises(ConfigError) as info:
            make_family(config.instance, config.epsilon)
        assert info.value.key == "instance.start"

    def test_config_3c(self):
        with pytest.raises(InvalidArgumentError):
            make_strategy("accelerated")
        with pytest.raises(InvalidArgumentError):
            make_strategy("momentum")

    def test_reports_4a(self, tmp_path):
        config = _config(out_dir=str(tmp_path))
        solve(config)
        solve(config, trial=3)
        first = read_json(tmp_path / "report.json")
        assert (tmp_path / "report_3.json").exists()
        assert first["method"] == "prox_outer"
        assert first["arm"] == "quantum"
        assert first["config"]["epsilon"] == 0.5
        assert "out_dir" not in first["config"]
        assert sum(first["ledger"]["phase_charges"].values()) == first["ledger"]["quantum_charged"]
