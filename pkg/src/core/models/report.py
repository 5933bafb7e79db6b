from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np
from numpy.typing import NDArray

from .ledger import QueryLedger


@dataclass
class SolveReport:
    output_point: NDArray[np.float64]
    suboptimality_estimate: Optional[float]
    ledger_snapshot: QueryLedger
    iterations: int
    wall_time: float
    config_echo: Dict[str, Any] = field(default_factory=dict)
    method: str = ""
    arm: Optional[str] = None
    objective_value: Optional[float] = None
    reference_value: Optional[float] = None
    budget_exhausted: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "arm": self.arm,
            "output_point": [float(v) for v in self.output_point],
            "objective_value": self.objective_value,
            "reference_value": self.reference_value,
            "suboptimality_estimate": self.suboptimality_estimate,
            "iterations": self.iterations,
            "budget_exhausted": self.budget_exhausted,
            "ledger": self.ledger_snapshot.to_dict(),
            "config": self.config_echo,
            "wall_time": self.wall_time,
        }
