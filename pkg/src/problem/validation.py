import numpy as np

from src.core import IFunctionFamily


def _sample_ball(rng: np.random.Generator, center: np.ndarray, radius: float, count: int) -> np.ndarray:
    d = center.shape[0]
    directions = rng.standard_normal((count, d))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    lengths = radius * rng.uniform(size=(count, 1)) ** (1.0 / d)
    return center + directions * lengths


def _pairs(family: IFunctionFamily, rng: np.random.Generator, n_pairs: int):
    xs = _sample_ball(rng, family.domain_center, family.domain_radius, n_pairs)
    ys = _sample_ball(rng, family.domain_center, family.domain_radius, n_pairs)
    return xs, ys


def check_lipschitz(family: IFunctionFamily, rng: np.random.Generator, n_pairs: int = 100) -> float:
    """
    Largest observed |f_i(x) - f_i(y)| / ||x - y|| over random pairs in the domain and all i.
    """
    worst = 0.0
    for x, y in zip(*_pairs(family, rng, n_pairs)):
        distance = float(np.linalg.norm(x - y))
        if distance == 0.0:
            continue
        worst = max(worst, float(np.max(np.abs(family.values(x) - family.values(y)))) / distance)
    return worst


def check_smoothness(family: IFunctionFamily, rng: np.random.Generator, n_pairs: int = 100) -> float:
    """
    Largest observed ||grad f_i(x) - grad f_i(y)|| / ||x - y||.
    """
    worst = 0.0
    for x, y in zip(*_pairs(family, rng, n_pairs)):
        distance = float(np.linalg.norm(x - y))
        if distance == 0.0:
            continue
        gaps = np.linalg.norm(family.gradients(x) - family.gradients(y), axis=1)
        worst = max(worst, float(np.max(gaps)) / distance)
    return worst


def check_subgradient(family: IFunctionFamily, rng: np.random.Generator, n_pairs: int = 100) -> float:
    """
    Largest violation of f_i(y) >= f_i(x) + <g_i(x), y - x>; zero for a valid family.
    """
    worst = 0.0
    for x, y in zip(*_pairs(family, rng, n_pairs)):
        lower = family.values(x) + family.gradients(x) @ (y - x)
        worst = max(worst, float(np.max(lower - family.values(y))))
    return worst
