import itertools
from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from .chain import chain_alpha, chain_values, prog


def _truncate(y: NDArray[np.float64], keep: int) -> NDArray[np.float64]:
    out = np.zeros_like(y)
    out[:keep] = y[:keep]
    return out


def check_zero_chain(chain_len: int,
                     n_functions: int,
                     smooth_param: float,
                     grid: NDArray[np.float64],
                     rng: np.random.Generator,
                     perturbations: int = 4,
                     tol: float = 1e-12) -> List[Tuple[Tuple[float, ...], int, int]]:
    """
    Brute-force check of the robust zero-chain identities on every grid point x in the
    unit ball and random y near x: for every p >= prog(x),
    f_i(y) = f_i(y_{<=p}) for i < p, f_p(y) = f_p(y_{<=p+1}), f_i(y) = f_{N-1}(y_{<=p}) for i > p.

    The neighborhood radius is min(alpha/4, margin/2) with margin the distance of the
    undiscovered coordinates from alpha. Returns (x, p, i) for every violation.
    """
    alpha = chain_alpha(chain_len)
    violations = []
    for coords in itertools.product(np.asarray(grid, dtype=np.float64), repeat=chain_len):
        x = np.array(coords)
        if np.linalg.norm(x) > 1.0:
            continue
        progress = prog(x, alpha)
        tail = np.abs(x[progress:])
        margin = alpha - float(tail.max()) if tail.size else np.inf
        radius = min(alpha / 4.0, margin / 2.0)

        for _ in range(perturbations):
            step = rng.standard_normal(chain_len)
            y = x + radius * rng.uniform() * step / np.linalg.norm(step)
            actual = chain_values(y, chain_len, n_functions, smooth_param)
            for p in range(progress, chain_len + 1):
                below = chain_values(_truncate(y, p), chain_len, n_functions, smooth_param)
                through = chain_values(_truncate(y, p + 1), chain_len, n_functions, smooth_param)
                for i in range(n_functions):
                    if i < p:
                        expected = below[i]
                    elif i == p:
                        expected = through[i]
                    else:
                        expected = below[n_functions - 1]
                    if abs(actual[i] - expected) > tol:
                        violations.append((coords, p, i))
    return violations
