from typing import Callable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize

from src.core import IFunctionFamily
from src.core.exceptions import InvalidArgumentError

Objective = Callable[[NDArray[np.float64]], float]


def grid_minimize(fn: Objective,
                  center: NDArray[np.float64],
                  radius: float,
                  points_per_axis: int = 201) -> Tuple[NDArray[np.float64], float]:
    """
    Brute-force minimum of fn over a regular grid clipped to B_radius(center), d <= 2.
    """
    center = np.asarray(center, dtype=np.float64)
    if center.shape[0] > 2:
        raise InvalidArgumentError(f"Grid oracle supports d <= 2, got d = {center.shape[0]}")

    axis = np.linspace(-radius, radius, points_per_axis)
    mesh = np.stack(np.meshgrid(*([axis] * center.shape[0]), indexing="ij"), axis=-1).reshape(-1, center.shape[0])
    points = center + mesh[np.linalg.norm(mesh, axis=1) <= radius]

    values = np.array([fn(p) for p in points])
    best = int(np.argmin(values))
    return points[best], float(values[best])


def minimize_on_ball(fn: Objective,
                     center: NDArray[np.float64],
                     radius: float,
                     points_per_axis: int = 61) -> Tuple[NDArray[np.float64], float]:
    """
    Minimum of a convex objective over B_radius(center): grid warm start for d <= 2,
    polished with SLSQP under the ball constraint.
    """
    center = np.asarray(center, dtype=np.float64)
    if center.shape[0] <= 2:
        start, start_value = grid_minimize(fn, center, radius, points_per_axis)
    else:
        start, start_value = center.copy(), fn(center)

    constraint = {"type": "ineq", "fun": lambda x: radius ** 2 - float(np.sum((x - center) ** 2))}
    result = minimize(fn, start, method="SLSQP", constraints=[constraint], options={"ftol": 1e-14, "maxiter": 500})

    polished = result.x
    distance = float(np.linalg.norm(polished - center))
    if distance > radius:
        polished = center + (polished - center) * (radius / distance)
    polished_value = fn(polished)
    if polished_value < start_value:
        return polished, float(polished_value)
    return start, float(start_value)


def reference_minimum(family: IFunctionFamily, center: NDArray[np.float64], radius: float) -> Optional[float]:
    """
    min of F_max over B_radius(center): the family's own answer when it has one, a grid
    oracle for d <= 2, otherwise None.
    """
    center = np.asarray(center, dtype=np.float64)
    known = family.reference_minimum(center, radius)
    if known is not None:
        return float(known)
    if family.dim <= 2:
        return grid_minimize(lambda x: float(np.max(family.values(x))), center, radius)[1]
    return None
