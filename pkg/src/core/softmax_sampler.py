from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray

from .function_family import IFunctionFamily
from .models import QueryLedger, SampleBatch, SmoothingContext


class ISoftmaxSampler(ABC):
    @abstractmethod
    def sample(self,
               family: IFunctionFamily,
               center: NDArray[np.float64],
               count: int,
               delta: float,
               ctx: SmoothingContext,
               ledger: QueryLedger,
               rng: np.random.Generator) -> SampleBatch:
        """
        Draws `count` indices from the softmax distribution at `center` and charges
        the ledger according to the sampler's cost model.
        """
        raise NotImplementedError
