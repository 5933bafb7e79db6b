import math

import numpy as np
from numpy.typing import NDArray

from src.core.exceptions import EmptyIntersectionError


def project_ball(y: NDArray[np.float64], center: NDArray[np.float64], radius: float) -> NDArray[np.float64]:
    offset = y - center
    distance = float(np.linalg.norm(offset))
    if distance <= radius:
        return y.copy()
    return center + offset * (radius / distance)


def _outside(x: NDArray[np.float64], center: NDArray[np.float64], radius: float) -> float:
    return max(0.0, float(np.linalg.norm(x - center)) - radius)


def project_two_balls(y: NDArray[np.float64],
                      c1: NDArray[np.float64],
                      r1: float,
                      c2: NDArray[np.float64],
                      r2: float,
                      tol: float = 1e-10,
                      max_sweeps: int = 200) -> NDArray[np.float64]:
    """
    Euclidean projection of y onto B_r1(c1) ∩ B_r2(c2) by Dykstra's alternating projections.
    Either radius may be math.inf. Every sweep ends with the projection onto the second
    ball, so the result always lies in it.
    """
    y = np.asarray(y, dtype=np.float64)
    c1 = np.asarray(c1, dtype=np.float64)
    c2 = np.asarray(c2, dtype=np.float64)

    if math.isinf(r1):
        return y.copy() if math.isinf(r2) else project_ball(y, c2, r2)
    if math.isinf(r2):
        return project_ball(y, c1, r1)

    gap = float(np.linalg.norm(c1 - c2)) - r1 - r2
    if gap > tol:
        raise EmptyIntersectionError(gap)
    if _outside(y, c1, r1) <= tol and _outside(y, c2, r2) <= tol:
        return y.copy()

    x = y.copy()
    p = np.zeros_like(y)
    q = np.zeros_like(y)
    for _ in range(max_sweeps):
        a = project_ball(x + p, c1, r1)
        p = x + p - a
        b = project_ball(a + q, c2, r2)
        q = a + q - b
        moved = float(np.linalg.norm(b - x))
        x = b
        if moved <= tol and _outside(x, c1, r1) <= tol:
            return x

    residual = _outside(x, c1, r1)
    if residual > math.sqrt(tol):
        raise EmptyIntersectionError(residual, f"Alternating projection did not reach the first ball (residual {residual:.3g})")
    return x
