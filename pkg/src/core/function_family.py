from abc import ABC, abstractmethod
from typing import Optional

import numpy as np
from numpy.typing import NDArray


class IFunctionFamily(ABC):
    """
    N convex functions over R^d with value and subgradient access.

    Concrete families are immutable once built and may be shared across threads.
    Oracle access that should be charged goes through src.problem.oracle; the
    methods here are the uncharged emulator access.
    """

    def __init__(self,
                 n_functions: int,
                 dim: int,
                 lipschitz: float,
                 smoothness: Optional[float],
                 domain_radius: float,
                 domain_center: Optional[NDArray[np.float64]] = None):
        self.n_functions = int(n_functions)
        self.dim = int(dim)
        self.lipschitz = float(lipschitz)
        self.smoothness = None if smoothness is None else float(smoothness)
        self.domain_radius = float(domain_radius)
        self.domain_center = (np.zeros(self.dim) if domain_center is None
                              else np.asarray(domain_center, dtype=np.float64))

    @abstractmethod
    def value(self, i: int, x: NDArray[np.float64]) -> float:
        """
        Returns f_i(x).
        """
        raise NotImplementedError

    @abstractmethod
    def gradient(self, i: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Returns a subgradient of f_i at x.
        """
        raise NotImplementedError

    def values(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Returns (f_0(x), ..., f_{N-1}(x)).
        """
        return np.array([self.value(i, x) for i in range(self.n_functions)])

    def gradients(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Returns the N x d matrix of subgradients at x.
        """
        return np.vstack([self.gradient(i, x) for i in range(self.n_functions)])

    def reference_minimum(self,
                          center: NDArray[np.float64],
                          radius: float) -> Optional[float]:
        """
        Returns min of F_max over B_radius(center) when the family knows it, else None.
        """
        return None
