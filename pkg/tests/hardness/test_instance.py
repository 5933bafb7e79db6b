import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.core.exceptions import ClippedScaleWarning, InvalidArgumentError
from src.core.models import QueryLedger
from src.hardness import (
    GuessingArm,
    SubgradientArm,
    TRACE_HEADER,
    chain_values,
    guess_rate,
    guess_success_bound,
    haar_columns,
    make_progress_arm,
    make_shuffled_instance,
    required_dimension,
    run_progress_experiment,
    scaled_chain_length,
    scaled_hard_family,
    write_trace_csv,
)
from src.problem import check_lipschitz
from src.utils import read_csv


class TestShuffledInstance:
    """
    Unit tests src/hardness/instance.py :
    1. Hidden structure
        1a. Haar columns are orthonormal
        1b. values(x)[Pi(j)] equals chain function j at U^T x
        1c. identity=True leaves the plain chain
        1d. Same seed -> same instance
    2. Minimizer
        2a. All functions vanish at the rotated zero point; reference minimum is 0
    3. Sizes
        3a. required_dimension(1, 1, 1/3) = 112
        3b. guess_success_bound is 1 when d = T and tiny for T = 2, d = 2000
        3c. d < T -> argument error
    4. Scaled family
        4a. L_f = R = 1, L_g = 400, eps = 0.2 -> T = 3
        4b. Clipped dimension warns; the family stays L_f-Lipschitz
    """

    def test_structure_1a(self):
        u = haar_columns(np.random.default_rng(0), 30, 4)
        np.testing.assert_allclose(u.T @ u, np.eye(4), atol=1e-12)

    def test_structure_1b(self):
        family = make_shuffled_instance(seed=3, chain_len=3, n_functions=6, smooth_param=1.0, dim=10)
        inst = family.instance
        x = np.random.default_rng(1).uniform(-0.3, 0.3, size=10)
        base = chain_values(inst.rotation.T @ x, 3, 6, 1.0)
        np.testing.assert_allclose(family.values(x)[inst.permutation], base)

    def test_structure_1c(self):
        family = make_shuffled_instance(seed=3, chain_len=3, n_functions=4, smooth_param=1.0, dim=5, identity=True)
        x = np.array([0.2, -0.1, 0.3, 0.7, 0.0])
        np.testing.assert_allclose(family.values(x), chain_values(x[:3], 3, 4, 1.0))

    def test_structure_1d(self):
        a = make_shuffled_instance(seed=9, chain_len=2, n_functions=5, smooth_param=0.0, dim=8)
        b = make_shuffled_instance(seed=9, chain_len=2, n_functions=5, smooth_param=0.0, dim=8)
        np.testing.assert_array_equal(a.instance.rotation, b.instance.rotation)
        np.testing.assert_array_equal(a.instance.permutation, b.instance.permutation)

    def test_minimizer_2a(self):
        family = make_shuffled_instance(seed=4, chain_len=3, n_functions=5, smooth_param=2.0, dim=12)
        x = family.minimizer()
        assert np.linalg.norm(x) == pytest.approx(1.0)
        np.testing.assert_allclose(family.values(x), 0.0, atol=1e-12)
        assert family.reference_minimum(np.zeros(12), 1.0) == 0.0
        assert family.progress(x) == 3

    def test_sizes_3a(self):
        assert required_dimension(1, 1, 1.0 / 3.0) == 112

    def test_sizes_3b(self):
        assert guess_success_bound(3, 3) == 1.0
        assert guess_success_bound(2, 2000) == pytest.approx(4.0 * math.exp(-1998.0 / 256.0))

    def test_sizes_3c(self):
        with pytest.raises(InvalidArgumentError):
            make_shuffled_instance(seed=0, chain_len=4, n_functions=4, smooth_param=1.0, dim=3)

    def test_scaled_4a(self):
        assert scaled_chain_length(1.0, 400.0, 1.0, 0.2) == 3

    def test_scaled_4b(self):
        with pytest.warns(ClippedScaleWarning):
            family = scaled_hard_family(2.0, 400.0, 1.0, 0.2, n_functions=8, seed=1, d_cap=20)
        assert family.dim == 20
        assert check_lipschitz(family, np.random.default_rng(0), n_pairs=50) <= 2.0 + 1e-9


class TestProgressExperiment:
    """
    Unit tests src/hardness/progress.py :
    1. Guessing
        1a. T = 2, d = 2000: at most 1 in 100 of 200 guesses reaches prog = T
        1b. Guessing against a bare family -> argument error
    2. Subgradient arm
        2a. Two steps from the center discover at most one coordinate
        2b. Charges N + 1 per step
    3. Trace output
        3a. CSV has the trace header and one row per observed point
        3b. Unknown arm -> argument error
    """

    def test_guessing_1a(self):
        family = make_shuffled_instance(seed=0, chain_len=2, n_functions=4, smooth_param=1.0, dim=2000)
        trace = run_progress_experiment(GuessingArm(), family, 200, QueryLedger(), np.random.default_rng(0))
        assert len(trace) == 200
        assert guess_rate(trace, 2) <= 0.01

    def test_guessing_1b(self):
        family = make_shuffled_instance(seed=0, chain_len=2, n_functions=4, smooth_param=1.0, dim=10)
        with pytest.raises(InvalidArgumentError):
            GuessingArm().run(family, 5, QueryLedger(), np.random.default_rng(0))

    def test_subgradient_2a(self):
        family = make_shuffled_instance(seed=2, chain_len=3, n_functions=4, smooth_param=1.0, dim=30)
        trace = run_progress_experiment(SubgradientArm(), family, 2 * 5, QueryLedger())
        assert len(trace) > 0
        assert trace.max_prog <= 1

    def test_subgradient_2b(self):
        family = make_shuffled_instance(seed=2, chain_len=3, n_functions=4, smooth_param=1.0, dim=30)
        ledger = QueryLedger()
        run_progress_experiment(SubgradientArm(), family, 23, ledger)
        assert ledger.quantum_charged == 4 * 5
        assert ledger.gradient_queries == 4

    def test_trace_3a(self, tmp_path):
        family = make_shuffled_instance(seed=2, chain_len=3, n_functions=4, smooth_param=1.0, dim=30)
        trace = run_progress_experiment(SubgradientArm(), family, 15, QueryLedger())
        rows = read_csv(write_trace_csv(tmp_path / "trace.csv", trace))
        assert len(rows) == len(trace)
        assert list(rows[0]) == ["version", *TRACE_HEADER]
        assert rows[0]["prog"] == "0"

    def test_trace_3b(self):
        assert isinstance(make_progress_arm("guessing"), GuessingArm)
        with pytest.raises(InvalidArgumentError):
            make_progress_arm("oracle")
