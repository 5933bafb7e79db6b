import math

import numpy as np
from numpy.typing import NDArray
from scipy.special import logsumexp

from src.core import IFunctionFamily
from src.core.exceptions import InternalError, InvalidArgumentError
from src.core.models import QueryLedger, SmoothingContext, TruncatedDistribution


def _check_delta(delta: float) -> None:
    if not 0.0 < delta < 1.0:
        raise InvalidArgumentError(f"Failure probability delta must lie in (0, 1), got {delta}")


def topk_charge(n_functions: int, k: int, delta: float, c_topk: float = 1.0) -> int:
    """
    ceil(c_topk * sqrt(K N) * ln(1/delta)).
    """
    return math.ceil(c_topk * math.sqrt(k * n_functions) * math.log(1.0 / delta) - 1e-9)


def top_k_of_values(values: NDArray[np.float64], k: int) -> NDArray[np.int64]:
    """
    Indices of the k largest values, ties going to the smaller index, in increasing order.
    """
    order = np.argsort(-np.asarray(values), kind="stable")
    return np.sort(order[:k]).astype(np.int64)


def top_k(family: IFunctionFamily,
          center: NDArray[np.float64],
          k: int,
          delta: float,
          ledger: QueryLedger) -> NDArray[np.int64]:
    """
    Emulated quantum maximum finding: exact top-K of (f_i(center))_i from uncharged
    emulator access, charged with the top-K formula.
    """
    if not 1 <= k <= family.n_functions:
        raise InvalidArgumentError(f"K must lie in [1, {family.n_functions}], got {k}")
    _check_delta(delta)

    values = family.values(np.asarray(center, dtype=np.float64))
    ledger.charge_formula(topk_charge(family.n_functions, k, delta, ledger.cost_constants.c_topk))
    return top_k_of_values(values, k)


def truncated_from_values(values: NDArray[np.float64],
                          top_set: NDArray[np.int64],
                          epsilon_prime: float,
                          corrupted: bool = False) -> TruncatedDistribution:
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]
    k = len(top_set)
    scaled = values / epsilon_prime

    in_top = np.zeros(n, dtype=bool)
    in_top[top_set] = True
    threshold = float(np.min(values[top_set]))

    log_flat = threshold / epsilon_prime
    log_z = float(logsumexp(np.append(scaled[top_set], log_flat), b=np.append(np.ones(k), n - k)))
    log_w = float(logsumexp(scaled))

    weights = np.where(in_top, np.exp(scaled - log_z), math.exp(log_flat - log_z))
    weights = weights / weights.sum()
    success_prob = min(1.0, math.exp(log_w - log_z))

    if not corrupted and success_prob < k / n - 1e-12:
        raise InternalError(f"Truncated success probability {success_prob:.6g} below K/N = {k / n:.6g}")

    return TruncatedDistribution(top_set=np.asarray(top_set, dtype=np.int64),
                                 threshold=threshold,
                                 log_normalizer=log_z,
                                 log_total_weight=log_w,
                                 weights=weights,
                                 success_prob=success_prob,
                                 corrupted=corrupted)


def build_truncated(family: IFunctionFamily,
                    center: NDArray[np.float64],
                    top_set: NDArray[np.int64],
                    ctx: SmoothingContext) -> TruncatedDistribution:
    """
    Proposal w' of the quantum sampler: top-set indices keep exp(f_i/eps')/Z, the rest get
    exp(h/eps')/Z with h the smallest top-set value. Uses uncharged emulator access.
    """
    values = family.values(np.asarray(center, dtype=np.float64))
    return truncated_from_values(values, top_set, ctx.epsilon_prime)


def rejection_draw(values: NDArray[np.float64],
                   truncated: TruncatedDistribution,
                   count: int,
                   epsilon_prime: float,
                   rng: np.random.Generator) -> tuple[NDArray[np.int64], int]:
    """
    Draws `count` exact softmax samples: propose i ~ w', accept top-set indices always and
    the others with probability exp((f_i - h)/eps'). Returns the samples and the number
    of proposals consumed.
    """
    n = values.shape[0]
    accept_prob = np.minimum(1.0, np.exp((np.asarray(values) - truncated.threshold) / epsilon_prime))
    accept_prob[truncated.top_set] = 1.0

    accepted = np.empty(0, dtype=np.int64)
    trials = 0
    while accepted.shape[0] < count:
        missing = count - accepted.shape[0]
        batch = max(16, int(math.ceil(1.25 * missing / max(truncated.success_prob, 1e-12))))
        proposals = rng.choice(n, size=batch, p=truncated.weights)
        keep = rng.random(batch) < accept_prob[proposals]
        hits = np.flatnonzero(keep)
        if hits.shape[0] >= missing:
            last = hits[missing - 1]
            trials += int(last) + 1
            accepted = np.concatenate([accepted, proposals[hits[:missing]]])
        else:
            trials += batch
            accepted = np.concatenate([accepted, proposals[hits]])
    return accepted.astype(np.int64), trials
