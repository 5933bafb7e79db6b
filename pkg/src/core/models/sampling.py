from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from numpy.typing import NDArray


class SamplingArm(Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TruncatedDistribution:
    """
    Proposal distribution w' built from the top-K set H: the K largest values keep
    their softmax weight, every other index is flattened to the threshold h.

    Normalizers are stored as logarithms; the plain values may overflow.
    """
    top_set: NDArray[np.int64]
    threshold: float
    log_normalizer: float
    log_total_weight: float
    weights: NDArray[np.float64]
    success_prob: float
    corrupted: bool = False

    @property
    def normalizer(self) -> float:
        return math.exp(self.log_normalizer)

    @property
    def total_weight(self) -> float:
        return math.exp(self.log_total_weight)


@dataclass(frozen=True)
class SampleBatch:
    indices: NDArray[np.int64]
    trials: int
    topk_charge: int = 0
    amplification_charge: int = 0
    weights_charge: int = 0
    distribution: Optional[TruncatedDistribution] = None

    @property
    def acceptance_rate(self) -> float:
        return len(self.indices) / self.trials if self.trials else 1.0

    @property
    def charged(self) -> int:
        return self.topk_charge + self.amplification_charge + self.weights_charge
