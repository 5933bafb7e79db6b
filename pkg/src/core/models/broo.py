from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from ..exceptions import InvalidArgumentError


class BrooConvention(Enum):
    SQUARED = "squared"
    LINEAR = "linear"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BrooQuery:
    """
    One ball regularized optimization oracle request: minimize
    F_smax(x) + lambda/2 ||x - center||^2 over B_radius(center) to accuracy lambda * delta^2 / 2,
    with failure probability at most 2 * failure_prob.
    """
    center: NDArray[np.float64]
    lam: float
    accuracy: float
    failure_prob: float
    radius: float

    def __post_init__(self):
        if self.lam <= 0:
            raise InvalidArgumentError(f"lambda must be positive, got {self.lam}")
        if self.accuracy <= 0:
            raise InvalidArgumentError(f"accuracy delta must be positive, got {self.accuracy}")
        if not 0.0 < self.failure_prob < 1.0:
            raise InvalidArgumentError(f"failure probability must lie in (0, 1), got {self.failure_prob}")
        if self.radius <= 0:
            raise InvalidArgumentError(f"radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class EpochState:
    k: int
    T_k: int
    eta_k: float
    D_k: float
    anchor: NDArray[np.float64]
