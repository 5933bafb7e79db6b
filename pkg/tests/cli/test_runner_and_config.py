import os
import sys
import threading

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.cli import loglog_fit, run_trials, trial_seed
from src.core.exceptions import ConfigError
from src.core.models import Command, ExperimentConfig, FamilyKind, Method, SamplingArm
from src.utils import stream, stream_key


class TestRunner:
    """
    Unit tests src/cli/runner.py & src/utils/rng.py :
    1. Trials
        1a. Results come back in task order with several workers
        1b. A single worker runs every task on the calling thread
    2. Seeds
        2a. trial_seed is deterministic and differs between trials
        2b. Same stream key -> same draws; different purpose -> different draws
    3. Fits
        3a. cost = 5 sqrt(N) -> slope 1/2
    """

    def test_trials_1a(self):
        assert run_trials(lambda t: t * t, list(range(20)), jobs=4) == [t * t for t in range(20)]

    def test_trials_1b(self):
        names = run_trials(lambda _: threading.current_thread().name, list(range(8)), jobs=1)
        assert names == [threading.current_thread().name] * 8

    def test_seeds_2a(self):
        assert trial_seed(3, 0, 8) == trial_seed(3, 0, 8)
        assert trial_seed(3, 0, 8) != trial_seed(3, 1, 8)

    def test_seeds_2b(self):
        a = stream(7, 0, "sampling").random(4)
        b = stream(7, 0, "sampling").random(4)
        c = stream(7, 0, "cost").random(4)
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, c)
        assert stream_key("sampling") != stream_key("cost")
        assert stream_key(5) == 5

    def test_fits_3a(self):
        n = np.array([64, 256, 1024, 4096])
        fit = loglog_fit(n, 5.0 * np.sqrt(n))
        assert fit.slope == pytest.approx(0.5)


class TestExperimentConfig:
    """
    Unit tests src/core/models/config.py :
    1. Parsing
        1a. Empty object -> documented defaults
        1b. Nested sections and enums parsed
    2. Errors carry the offending key
        2a. Unknown top-level key
        2b. Unknown nested key
        2c. Wrong type
        2d. Unknown enum member
    3. Echo
        3a. to_dict drops out_dir and jobs, keeps enums as strings
        3b. with_overrides only replaces what is given
    """

    def test_parsing_1a(self):
        config = ExperimentConfig.from_dict({})
        assert config.command is Command.SOLVE
        assert config.method is Method.PROX_OUTER
        assert config.arm is SamplingArm.QUANTUM
        assert config.instance.family is FamilyKind.AFFINE
        assert config.sweep.delta == 1e-3

    def test_parsing_1b(self):
        config = ExperimentConfig.from_dict({
            "command": "hardness",
            "arm": "classical",
            "instance": {"family": "scaled_hard", "smoothness": 400, "start": [0, 1]},
            "hardness": {"n_values": [4, 8], "arm": "guessing"},
            "cost_constants": {"c_topk": 2.5},
        })
        assert config.command is Command.HARDNESS
        assert config.instance.start == (0.0, 1.0)
        assert config.hardness.n_values == (4, 8)
        assert config.cost_constants.c_topk == 2.5

    def test_errors_2a(self):
        with pytest.raises(ConfigError) as info:
            ExperimentConfig.from_dict({"epsilonn": 0.1})
        assert info.value.key == "epsilonn"

    def test_errors_2b(self):
        with pytest.raises(ConfigError) as info:
            ExperimentConfig.from_dict({"search": {"rounds": [2], "qubits": 3}})
        assert info.value.key == "search.qubits"

    def test_errors_2c(self):
        with pytest.raises(ConfigError) as info:
            ExperimentConfig.from_dict({"trials": "many"})
        assert info.value.key == "trials"
        with pytest.raises(ConfigError) as info:
            ExperimentConfig.from_dict({"sweep": {"delta": 1.5}})
        assert info.value.key == "sweep.delta"

    def test_errors_2d(self):
        with pytest.raises(ConfigError) as info:
            ExperimentConfig.from_dict({"method": "newton"})
        assert info.value.key == "method"
        assert "prox_outer" in str(info.value)

    def test_echo_3a(self):
        echo = ExperimentConfig.from_dict({"out_dir": "x", "jobs": 3, "arm": "classical"}).to_dict()
        assert "out_dir" not in echo and "jobs" not in echo
        assert echo["arm"] == "classical"
        assert echo["instance"]["family"] == "affine"

    def test_echo_3b(self):
        config = ExperimentConfig.from_dict({"seed": 4, "trials": 2})
        changed = config.with_overrides(trials=5)
        assert (changed.seed, changed.trials) == (4, 5)
