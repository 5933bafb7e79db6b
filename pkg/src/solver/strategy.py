from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.broo import broo_solve
from src.core import IFunctionFamily, IOuterStrategy, ISoftmaxSampler
from src.core.exceptions import InvalidArgumentError
from src.core.models import BrooQuery, QueryLedger, SmoothingContext
from src.qsampler import QuantumSoftmaxSampler


class SimpleProximalStrategy(IOuterStrategy):
    """
    Ball-proximal recentering: the next center is the oracle's answer at the current one.
    """

    name = "simple-proximal"

    def __init__(self, sampler: Optional[ISoftmaxSampler] = None):
        self.sampler = sampler if sampler is not None else QuantumSoftmaxSampler()

    def next_center(self,
                    family: IFunctionFamily,
                    query: BrooQuery,
                    ctx: SmoothingContext,
                    ledger: QueryLedger,
                    rng: np.random.Generator) -> NDArray[np.float64]:
        return broo_solve(family, query, ctx, ledger, rng, sampler=self.sampler)


def make_strategy(name: str, sampler: Optional[ISoftmaxSampler] = None) -> IOuterStrategy:
    match name:
        case "simple-proximal":
            return SimpleProximalStrategy(sampler)
        case "accelerated":
            raise InvalidArgumentError("Strategy 'accelerated' is not available; use 'simple-proximal'")
        case _:
            raise InvalidArgumentError(f"Unsupported outer strategy: {name}")
