import os
import sys
import warnings

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from src.core.exceptions import ConfigError, DomainWarning, InvalidArgumentError
from src.core.models import CostConstants, QueryLedger
from src.problem import (
    AffineFamily,
    evaluate,
    evaluate_all,
    subgradient_all,
    subgradient_query,
)


# -------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------

def _two_affine(radius: float = 1.0) -> AffineFamily:
    return AffineFamily(np.array([[1.0, 0.0], [-1.0, 0.0]]), np.array([0.0, 0.0]), domain_radius=radius)


class TestChargedOracles:
    """
    Unit tests src/problem/oracle.py :
    1. evaluate
        1a. Two functions, x = 0 -> (0, 0); ledger value_queries = 2
        1b. Index N -> argument error, nothing charged
        1c. Point outside the domain ball -> DomainWarning, value still returned
    2. subgradient_query
        2a. f_i(x) = a.x + b -> a, one gradient query charged
        2b. Wrong dimension -> argument error
    3. Vectorised access
        3a. evaluate_all charges N value queries
        3b. subgradient_all charges N gradient queries
    """

    def test_evaluate_1a(self):
        family = _two_affine()
        ledger = QueryLedger()
        x = np.zeros(2)
        assert evaluate(family, 0, x, ledger) == 0.0
        assert evaluate(family, 1, x, ledger) == 0.0
        assert ledger.value_queries == 2
        assert ledger.quantum_charged == 2

    def test_evaluate_1b(self):
        family = _two_affine()
        ledger = QueryLedger()
        with pytest.raises(InvalidArgumentError):
            evaluate(family, 2, np.zeros(2), ledger)
        with pytest.raises(InvalidArgumentError):
            evaluate(family, -1, np.zeros(2), ledger)
        assert ledger.quantum_charged == 0

    def test_evaluate_1c(self):
        family = _two_affine(radius=1.0)
        with pytest.warns(DomainWarning):
            value = evaluate(family, 0, np.array([3.0, 0.0]), QueryLedger())
        assert value == pytest.approx(3.0)

    def test_subgradient_query_2a(self):
        family = AffineFamily(np.array([[0.3, -0.4], [0.0, 1.0]]), np.array([1.0, 2.0]), domain_radius=1.0)
        ledger = QueryLedger()
        g = subgradient_query(family, 0, np.array([0.1, 0.2]), ledger)
        np.testing.assert_allclose(g, [0.3, -0.4])
        assert ledger.gradient_queries == 1
        assert ledger.value_queries == 0

    def test_subgradient_query_2b(self):
        with pytest.raises(InvalidArgumentError):
            subgradient_query(_two_affine(), 0, np.zeros(3), QueryLedger())

    def test_vectorised_3a(self):
        family = _two_affine()
        ledger = QueryLedger()
        values = evaluate_all(family, np.array([0.5, 0.0]), ledger)
        np.testing.assert_allclose(values, [0.5, -0.5])
        assert ledger.value_queries == 2

    def test_vectorised_3b(self):
        family = _two_affine()
        ledger = QueryLedger()
        grads = subgradient_all(family, np.zeros(2), ledger)
        assert grads.shape == (2, 2)
        assert ledger.gradient_queries == 2


class TestQueryLedger:
    """
    Unit tests src/core/models/ledger.py :
    1. Phases
        1a. Charges land in the active phase; phase totals sum to quantum_charged
        1b. Nested phases restore the previous phase
    2. Snapshot & merge
        2a. snapshot is independent of later charges
        2b. merge adds counters and phase totals
    3. Cost constants
        3a. Non-positive constant -> ConfigError naming it
        3b. Unknown key in from_dict -> ConfigError naming cost_constants.<key>
        3c. Negative charge -> ValueError
    """

    def test_phase_1a(self):
        ledger = QueryLedger()
        with ledger.phase("sampling"):
            ledger.charge_formula(7)
        with ledger.phase("sgd"):
            ledger.charge_value(2)
            ledger.charge_gradient(1)
        ledger.charge_value(1)
        assert ledger.phase_charges == {"sampling": 7, "sgd": 3, "untracked": 1}
        assert sum(ledger.phase_charges.values()) == ledger.quantum_charged == 11

    def test_phase_1b(self):
        ledger = QueryLedger()
        with ledger.phase("outer"):
            with ledger.phase("inner"):
                assert ledger.current_phase == "inner"
            assert ledger.current_phase == "outer"
        assert ledger.current_phase == "untracked"

    def test_snapshot_2a(self):
        ledger = QueryLedger()
        ledger.charge_value(3)
        snap = ledger.snapshot()
        ledger.charge_value(5)
        assert snap.quantum_charged == 3
        assert ledger.quantum_charged == 8

    def test_merge_2b(self):
        a, b = QueryLedger(), QueryLedger()
        a.charge_value(2)
        with b.phase("sampling"):
            b.charge_formula(4)
        b.charge_gradient(1)
        a.merge(b)
        assert a.quantum_charged == 7
        assert a.gradient_queries == 1
        assert a.phase_charges["sampling"] == 4

    def test_constants_3a(self):
        with pytest.raises(ConfigError) as info:
            CostConstants(c_amp=0.0)
        assert info.value.key == "c_amp"

    def test_constants_3b(self):
        with pytest.raises(ConfigError) as info:
            CostConstants.from_dict({"c_topk": 2.0, "c_bogus": 1.0})
        assert info.value.key == "cost_constants.c_bogus"
        assert CostConstants.from_dict({"c_topk": 2.0}).c_topk == 2.0

    def test_constants_3c(self):
        with pytest.raises(ValueError):
            QueryLedger().charge_formula(-1)
