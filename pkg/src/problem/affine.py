from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize

from src.core import IFunctionFamily
from src.core.exceptions import InvalidArgumentError
from src.utils import stream


class AffineFamily(IFunctionFamily):
    """
    f_i(x) = <a_i, x> + b_i. F_max is piecewise linear; its minimum over a ball is the
    value of a small epigraph program.
    """

    def __init__(self,
                 slopes: NDArray[np.float64],
                 offsets: NDArray[np.float64],
                 domain_radius: float,
                 domain_center: Optional[NDArray[np.float64]] = None,
                 lipschitz: Optional[float] = None):
        slopes = np.atleast_2d(np.asarray(slopes, dtype=np.float64))
        offsets = np.asarray(offsets, dtype=np.float64).reshape(-1)
        if slopes.shape[0] != offsets.shape[0]:
            raise InvalidArgumentError("slopes and offsets must describe the same number of functions")
        if slopes.shape[0] < 2:
            raise InvalidArgumentError(f"A family needs N >= 2 functions, got {slopes.shape[0]}")

        max_norm = float(np.max(np.linalg.norm(slopes, axis=1)))
        if lipschitz is None:
            lipschitz = max_norm if max_norm > 0 else 1.0
        elif max_norm > lipschitz * (1.0 + 1e-12):
            raise InvalidArgumentError(f"Slope norm {max_norm:.6g} exceeds the Lipschitz constant {lipschitz}")

        super().__init__(n_functions=slopes.shape[0],
                         dim=slopes.shape[1],
                         lipschitz=lipschitz,
                         smoothness=0.0,
                         domain_radius=domain_radius,
                         domain_center=domain_center)
        self.slopes = slopes
        self.offsets = offsets

    def value(self, i: int, x: NDArray[np.float64]) -> float:
        return float(self.slopes[i] @ x + self.offsets[i])

    def gradient(self, i: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.slopes[i].copy()

    def values(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.slopes @ x + self.offsets

    def gradients(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.slopes.copy()

    def reference_minimum(self, center: NDArray[np.float64], radius: float) -> Optional[float]:
        return affine_ball_minimum(self.slopes, self.offsets, np.asarray(center, dtype=np.float64), radius)


def affine_ball_minimum(slopes: NDArray[np.float64],
                        offsets: NDArray[np.float64],
                        center: NDArray[np.float64],
                        radius: float) -> float:
    """
    min_{||x - center|| <= radius} max_i <a_i, x> + b_i via the epigraph program
    min t  s.t.  t >= <a_i, x> + b_i,  ||x - center||^2 <= radius^2.
    """
    def objective(z):
        return z[-1]

    def objective_grad(z):
        g = np.zeros_like(z)
        g[-1] = 1.0
        return g

    constraints = [
        {"type": "ineq",
         "fun": lambda z: z[-1] - (slopes @ z[:-1] + offsets),
         "jac": lambda z: np.hstack([-slopes, np.ones((slopes.shape[0], 1))])},
        {"type": "ineq",
         "fun": lambda z: np.array([radius ** 2 - float(np.sum((z[:-1] - center) ** 2))]),
         "jac": lambda z: np.hstack([-2.0 * (z[:-1] - center), [0.0]]).reshape(1, -1)},
    ]

    best = float("inf")
    starts = [center]
    worst = int(np.argmax(slopes @ center + offsets))
    norm = float(np.linalg.norm(slopes[worst]))
    if norm > 0:
        starts.append(center - radius * slopes[worst] / norm)
    for x0 in starts:
        z0 = np.append(x0, float(np.max(slopes @ x0 + offsets)))
        result = minimize(objective, z0, jac=objective_grad, constraints=constraints,
                          method="SLSQP", options={"ftol": 1e-12, "maxiter": 500})
        x = result.x[:-1]
        distance = float(np.linalg.norm(x - center))
        if distance > radius:
            x = center + (x - center) * (radius / distance)
        best = min(best, float(np.max(slopes @ x + offsets)))
    return best


def make_affine_family(seed: int,
                       n_functions: int,
                       dim: int,
                       lipschitz: float,
                       radius: float) -> AffineFamily:
    """
    Random affine family: slopes uniform in the ball of radius L_f, offsets spread on the
    scale L_f * R / 4. Reproducible from seed.
    """
    if n_functions < 2:
        raise InvalidArgumentError(f"A family needs N >= 2 functions, got {n_functions}")
    if dim < 1:
        raise InvalidArgumentError(f"Dimension must be positive, got {dim}")

    rng = stream(seed, "instance", "affine")
    directions = rng.standard_normal((n_functions, dim))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    lengths = lipschitz * rng.uniform(size=(n_functions, 1)) ** (1.0 / dim)
    slopes = directions * lengths
    offsets = rng.normal(scale=lipschitz * radius / 4.0, size=n_functions)
    return AffineFamily(slopes, offsets, domain_radius=radius, lipschitz=lipschitz)


def make_symmetric_affine_family(dim: int, lipschitz: float, radius: float) -> AffineFamily:
    """
    N = 2, a_1 = -a_2 = L_f e_1, b = 0: F_max(x) = L_f |x_1|, minimum 0 at x = 0.
    """
    if dim < 1:
        raise InvalidArgumentError(f"Dimension must be positive, got {dim}")
    e1 = np.zeros(dim)
    e1[0] = lipschitz
    return AffineFamily(np.vstack([e1, -e1]), np.zeros(2), domain_radius=radius, lipschitz=lipschitz)
