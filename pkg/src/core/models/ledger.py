from __future__ import annotations

import copy
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from typing import Any, Dict, Iterator

from ..exceptions import ConfigError


@dataclass(frozen=True)
class CostConstants:
    """
    Constant factors hidden inside the O(.) / Theta(.) cost and schedule formulas.

    c_topk  - top-K maximum finding charge ceil(c_topk * sqrt(K N) * ln(1/delta))
    c_amp   - amplitude amplification rounds ceil(c_amp / sqrt(p_hat))
    c_iters - BROO iteration budget multiplier
    c_D     - Epoch-SGD-Proj initial domain size multiplier
    c_delta - outer loop accuracy delta = c_delta * eps / (lambda R)
    c_ball  - ball parameter c of the exponentiated softmax (r L_f <= c eps')
    """
    c_topk: float = 1.0
    c_amp: float = 1.0
    c_iters: float = 1.0
    c_D: float = 1.0
    c_delta: float = 1.0
    c_ball: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f.name, f"Cost constant '{f.name}' must be a positive number, got {value!r}")

    def to_dict(self) -> Dict[str, float]:
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> CostConstants:
        known = {f.name for f in fields(cls)}
        for key in data:
            if key not in known:
                raise ConfigError(f"cost_constants.{key}", f"Unknown cost constant '{key}'")
        return cls(**data)


@dataclass
class QueryLedger:
    """
    Running counts of charged oracle queries.

    value_queries / gradient_queries count emulated oracle calls; quantum_charged is
    the total charged under the active cost model (one per oracle call plus the
    top-K and amplitude amplification formulas). Every charge is also attributed to
    the current phase, so phase_charges always sums to quantum_charged.
    """
    value_queries: int = 0
    gradient_queries: int = 0
    quantum_charged: int = 0
    cost_constants: CostConstants = field(default_factory=CostConstants)
    phase_charges: Dict[str, int] = field(default_factory=dict)
    current_phase: str = "untracked"

    def charge_value(self, count: int = 1) -> None:
        self.value_queries += count
        self._charge(count)

    def charge_gradient(self, count: int = 1) -> None:
        self.gradient_queries += count
        self._charge(count)

    def charge_formula(self, amount: int) -> None:
        """
        Charges a cost-formula amount that does not correspond to individual oracle calls.
        """
        self._charge(amount)

    def _charge(self, amount: int) -> None:
        if amount < 0:
            raise ValueError(f"Ledger charges must be nonnegative, got {amount}")
        self.quantum_charged += int(amount)
        self.phase_charges[self.current_phase] = self.phase_charges.get(self.current_phase, 0) + int(amount)

    @contextmanager
    def phase(self, name: str) -> Iterator[QueryLedger]:
        previous = self.current_phase
        self.current_phase = name
        try:
            yield self
        finally:
            self.current_phase = previous

    def snapshot(self) -> QueryLedger:
        return copy.deepcopy(self)

    def merge(self, other: QueryLedger) -> None:
        self.value_queries += other.value_queries
        self.gradient_queries += other.gradient_queries
        self.quantum_charged += other.quantum_charged
        for name, amount in other.phase_charges.items():
            self.phase_charges[name] = self.phase_charges.get(name, 0) + amount

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value_queries": self.value_queries,
            "gradient_queries": self.gradient_queries,
            "quantum_charged": self.quantum_charged,
            "cost_constants": self.cost_constants.to_dict(),
            "phase_charges": dict(sorted(self.phase_charges.items())),
        }
