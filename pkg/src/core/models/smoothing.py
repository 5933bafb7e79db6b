from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..exceptions import InvalidArgumentError


@dataclass
class SmoothingContext:
    """
    Symbols of the softmax smoothing: eps, eps' = eps / (2 ln N), the regularization
    strength lambda, the ball center x_bar and the ball radius r_eps.

    The context also caches the softmax weights at its center so that every Gamma
    routine of one oracle call shares a single charged computation.
    """
    epsilon: float
    epsilon_prime: float
    lam: float
    center: NDArray[np.float64]
    radius: float
    lipschitz: float
    n_functions: int
    c_ball: float = 1.0
    _weights_cache: Dict[Tuple[int, bytes], Tuple[NDArray[np.float64], NDArray[np.float64]]] = field(
        default_factory=dict, repr=False, compare=False)

    @classmethod
    def create(cls,
               epsilon: float,
               n_functions: int,
               lipschitz: float,
               center: NDArray[np.float64],
               *,
               lam: float = 0.0,
               radius: Optional[float] = None,
               c_ball: float = 1.0) -> SmoothingContext:
        if n_functions < 2:
            raise InvalidArgumentError(f"Softmax smoothing needs N >= 2 functions, got {n_functions}")
        if epsilon <= 0:
            raise InvalidArgumentError(f"epsilon must be positive, got {epsilon}")
        if lipschitz <= 0:
            raise InvalidArgumentError(f"Lipschitz constant must be positive, got {lipschitz}")
        if lam < 0:
            raise InvalidArgumentError(f"lambda must be nonnegative, got {lam}")

        epsilon_prime = epsilon / (2.0 * math.log(n_functions))
        if radius is None:
            radius = c_ball * epsilon_prime / lipschitz
        if radius <= 0:
            raise InvalidArgumentError(f"Ball radius must be positive, got {radius}")

        return cls(epsilon=float(epsilon),
                   epsilon_prime=epsilon_prime,
                   lam=float(lam),
                   center=np.array(center, dtype=np.float64),
                   radius=float(radius),
                   lipschitz=float(lipschitz),
                   n_functions=int(n_functions),
                   c_ball=float(c_ball))

    @property
    def ball_parameter(self) -> float:
        """
        c = r_eps * L_f / eps'.
        """
        return self.radius * self.lipschitz / self.epsilon_prime

    def recentered(self,
                   center: NDArray[np.float64],
                   lam: Optional[float] = None,
                   radius: Optional[float] = None) -> SmoothingContext:
        """
        Returns a context for a new ball; the weight cache starts empty.
        """
        return SmoothingContext(epsilon=self.epsilon,
                                epsilon_prime=self.epsilon_prime,
                                lam=self.lam if lam is None else float(lam),
                                center=np.array(center, dtype=np.float64),
                                radius=self.radius if radius is None else float(radius),
                                lipschitz=self.lipschitz,
                                n_functions=self.n_functions,
                                c_ball=self.c_ball)

    def check_ball_parameter(self) -> None:
        if self.radius * self.lipschitz > self.c_ball * self.epsilon_prime * (1.0 + 1e-9):
            raise InvalidArgumentError(
                f"Ball radius {self.radius:.6g} violates r * L_f <= c * eps' "
                f"(c={self.c_ball}, eps'={self.epsilon_prime:.6g}, L_f={self.lipschitz})")

    def cached_weights(self, key: Tuple[int, bytes]):
        return self._weights_cache.get(key)

    def store_weights(self,
                      key: Tuple[int, bytes],
                      values: NDArray[np.float64],
                      weights: NDArray[np.float64]) -> None:
        self._weights_cache[key] = (values, weights)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "epsilon": self.epsilon,
            "epsilon_prime": self.epsilon_prime,
            "lambda": self.lam,
            "center": self.center.tolist(),
            "radius": self.radius,
        }
