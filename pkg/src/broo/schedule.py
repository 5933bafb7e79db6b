import math
from typing import Iterator, Tuple

from src.core.exceptions import InvalidArgumentError


FIRST_EPOCH_LENGTH = 450


def iteration_budget(lam: float, delta: float, sigma: float, lipschitz: float, c_iters: float = 1.0) -> int:
    """
    Total SGD iterations of one BROO call:
    ceil(c_iters * L_f^2 / (lam^2 delta^2) * ln(ln(max(L_f / (lam delta), e^2)) / sigma)).
    """
    if lam <= 0 or delta <= 0 or lipschitz <= 0 or c_iters <= 0:
        raise InvalidArgumentError("lambda, delta, L_f and c_iters must be positive")
    if not 0.0 < sigma < 1.0:
        raise InvalidArgumentError(f"sigma must lie in (0, 1), got {sigma}")

    ratio = lipschitz / (lam * delta)
    inner = math.log(math.log(max(ratio, math.e ** 2)) / sigma)
    return max(1, math.ceil(c_iters * ratio * ratio * inner - 1e-9))


def initial_domain(gradient_bound: float, lam: float, total: int, sigma: float, c_d: float = 1.0) -> float:
    """
    D_1 = c_D * G * sqrt(ln(ln(total) / sigma)) / lam, with ln(total) floored at 1.
    """
    return c_d * gradient_bound * math.sqrt(math.log(max(math.log(max(total, 1)), 1.0) / sigma)) / lam


def epoch_schedule(total: int, lam: float, first_domain: float) -> Iterator[Tuple[int, int, float, float]]:
    """
    Yields (k, T_k, eta_k, D_k) for every epoch that fits in `total` iterations.
    T doubles, eta halves and D shrinks by sqrt(2) from epoch to epoch. A budget below
    the first epoch length gives one truncated epoch of `total` iterations.
    """
    if total < FIRST_EPOCH_LENGTH:
        yield 1, total, 1.0 / (3.0 * lam), first_domain
        return

    k, length, eta, domain, used = 1, FIRST_EPOCH_LENGTH, 1.0 / (3.0 * lam), first_domain, 0
    while used + length <= total:
        yield k, length, eta, domain
        used += length
        k, length, eta, domain = k + 1, 2 * length, eta / 2.0, domain / math.sqrt(2.0)
