import math

import numpy as np
from numpy.typing import NDArray


def chain_alpha(chain_len: int) -> float:
    return 1.0 / (4.0 * chain_len ** 1.5)


def chain_anchor(chain_len: int) -> float:
    return 1.0 / math.sqrt(chain_len)


def psi(t, alpha: float, smooth_param: float):
    """
    0 on |t| <= alpha, l/2 (|t| - alpha)^2 up to |t| = alpha + 1/l, then
    |t| - alpha - 1/(2l). l = 0 gives max(|t| - alpha, 0).
    """
    excess = np.maximum(np.abs(np.asarray(t, dtype=np.float64)) - alpha, 0.0)
    if smooth_param == 0:
        out = excess
    else:
        out = np.where(excess <= 1.0 / smooth_param,
                       0.5 * smooth_param * excess ** 2,
                       excess - 0.5 / smooth_param)
    return float(out) if np.ndim(out) == 0 else out


def psi_derivative(t, alpha: float, smooth_param: float):
    """
    psi'(t); at the kink |t| = alpha of the l = 0 form the value from the flat side (0).
    """
    t = np.asarray(t, dtype=np.float64)
    excess = np.maximum(np.abs(t) - alpha, 0.0)
    if smooth_param == 0:
        slope = np.where(excess > 0.0, 1.0, 0.0)
    else:
        slope = np.minimum(smooth_param * excess, 1.0)
    out = np.sign(t) * slope
    return float(out) if np.ndim(out) == 0 else out


def _differences(y: NDArray[np.float64], chain_len: int) -> NDArray[np.float64]:
    y = np.asarray(y, dtype=np.float64)[:chain_len]
    previous = np.concatenate([[chain_anchor(chain_len)], y[:-1]])
    return 0.5 * (y - previous)


def chain_values(y: NDArray[np.float64], chain_len: int, n_functions: int, smooth_param: float) -> NDArray[np.float64]:
    """
    (f_0(y), ..., f_{N-1}(y)) of the unrotated chain: f_j(y) = psi((y_j - y_{j-1}) / 2) for
    j < T with y_{-1} = 1/sqrt(T), and 0 for j >= T.
    """
    values = np.zeros(n_functions)
    values[:chain_len] = psi(_differences(y, chain_len), chain_alpha(chain_len), smooth_param)
    return values


def chain_gradients(y: NDArray[np.float64], chain_len: int, n_functions: int, smooth_param: float) -> NDArray[np.float64]:
    y = np.asarray(y, dtype=np.float64)
    slopes = 0.5 * np.atleast_1d(psi_derivative(_differences(y, chain_len), chain_alpha(chain_len), smooth_param))
    grads = np.zeros((n_functions, y.shape[0]))
    rows = np.arange(chain_len)
    grads[rows, rows] = slopes
    grads[rows[1:], rows[1:] - 1] = -slopes[1:]
    return grads


def hard_value(i: int, y: NDArray[np.float64], chain_len: int, smooth_param: float) -> float:
    if i >= chain_len:
        return 0.0
    return float(psi(_differences(y, chain_len)[i], chain_alpha(chain_len), smooth_param))


def hard_gradient(i: int, y: NDArray[np.float64], chain_len: int, smooth_param: float) -> NDArray[np.float64]:
    y = np.asarray(y, dtype=np.float64)
    grad = np.zeros(y.shape[0])
    if i >= chain_len:
        return grad
    slope = 0.5 * psi_derivative(_differences(y, chain_len)[i], chain_alpha(chain_len), smooth_param)
    grad[i] = slope
    if i > 0:
        grad[i - 1] = -slope
    return grad


def prog(y: NDArray[np.float64], alpha: float) -> int:
    """
    1 + the last (0-based) index with |y_j| >= alpha; 0 when there is none.
    """
    hits = np.flatnonzero(np.abs(np.asarray(y, dtype=np.float64)) >= alpha)
    return int(hits[-1]) + 1 if hits.size else 0


def suboptimality_floor(chain_len: int, smooth_param: float) -> float:
    """
    min(1 / (8 T^{3/2}), l / (32 T^3)).

    Not a valid lower bound in general: at T = 1, l = 4 the point y = 0.24 has
    prog 0 but objective ~0.034 < 1/8. progress_gap is the certified floor.
    """
    return min(1.0 / (8.0 * chain_len ** 1.5), smooth_param / (32.0 * chain_len ** 3))


def progress_gap(chain_len: int, smooth_param: float) -> float:
    """
    psi(3 / (8 T^{3/2})): every y with prog(y) < T has max_j f_j(y) at least this large.
    """
    return psi(3.0 / (8.0 * chain_len ** 1.5), chain_alpha(chain_len), smooth_param)


def zero_point(chain_len: int) -> NDArray[np.float64]:
    """
    y_j = 1/sqrt(T) for every j: all chain functions vanish, ||y|| = 1.
    """
    return np.full(chain_len, chain_anchor(chain_len))
