from abc import ABC, abstractmethod

import numpy as np

from .function_family import IFunctionFamily
from .models import QueryLedger


class IProgressArm(ABC):
    """
    Query strategy run against a shuffled hard instance while its progress is recorded.
    """

    name: str = ""

    @abstractmethod
    def run(self,
            family: IFunctionFamily,
            budget: int,
            ledger: QueryLedger,
            rng: np.random.Generator) -> None:
        """
        Spends at most `budget` queries (or guesses) against `family`.
        """
        raise NotImplementedError
