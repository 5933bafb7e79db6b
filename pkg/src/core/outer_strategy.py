from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray

from .function_family import IFunctionFamily
from .models import BrooQuery, QueryLedger, SmoothingContext


class IOuterStrategy(ABC):
    """
    Outer loop that drives a ball regularized optimization oracle towards a
    minimizer of the softmax surrogate.
    """

    name: str = ""

    @abstractmethod
    def next_center(self,
                    family: IFunctionFamily,
                    query: BrooQuery,
                    ctx: SmoothingContext,
                    ledger: QueryLedger,
                    rng: np.random.Generator) -> NDArray[np.float64]:
        """
        Issues one oracle call at query.center and returns the next center.
        """
        raise NotImplementedError
