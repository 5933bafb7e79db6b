import logging
from typing import Dict

import numpy as np

from src.core.exceptions import InvalidArgumentError
from src.core.models import ChainedGroverResult, Register, SearchInstance
from .instance import search_table
from .simulator import (
    apply_adversary_step,
    apply_search_oracle,
    check_size,
    diffusion,
    initial_state,
    measure_register,
    phase_on_nonzero_result,
    uniform_item,
)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2 ** 20


def grover_iterations(per_round_queries: int) -> int:
    """
    Grover iterations that fit in a round next to the final read-out query, two oracle
    calls each.
    """
    return max(per_round_queries - 1, 0) // 2


def run_round(instance: SearchInstance, key: int, per_round_queries: int, table: np.ndarray) -> Dict[int, float]:
    """
    One round from |key>|0>|0>: uniform item superposition, Grover iterations under the
    held key, one read-out query and a measurement of the result register. Returns the
    distribution of the key held afterwards (a zero read-out keeps the old key).
    """
    if per_round_queries == 0:
        return {key: 1.0}

    state = apply_adversary_step(initial_state(instance, key=key), uniform_item())
    for _ in range(grover_iterations(per_round_queries)):
        state = apply_search_oracle(state, instance, table)
        state = apply_adversary_step(state, phase_on_nonzero_result())
        state = apply_search_oracle(state, instance, table)
        state = apply_adversary_step(state, diffusion(key_value=key))
    state = apply_search_oracle(state, instance, table)

    outcome: Dict[int, float] = {}
    for result, probability in enumerate(measure_register(state, Register.RESULT)):
        if probability <= 0.0:
            continue
        held = result if result != 0 else key
        outcome[held] = outcome.get(held, 0.0) + float(probability)
    return outcome


def run_chained_grover(instance: SearchInstance,
                       per_round_queries: int,
                       cap: int = DEFAULT_CAP) -> ChainedGroverResult:
    """
    Canonical chained adversary: K - 1 rounds, each searching with the key it currently
    holds. Measurement branches are tracked exactly and merged by held key. Success is the
    probability of holding s_{K-1} at the end.
    """
    if per_round_queries < 0:
        raise InvalidArgumentError(f"Per-round queries must be nonnegative, got {per_round_queries}")
    check_size(instance, cap)

    table = search_table(instance)
    used = 0 if per_round_queries == 0 else 2 * grover_iterations(per_round_queries) + 1
    target = instance.keys[-1]

    branches: Dict[int, float] = {0: 1.0}
    round_success = []
    for k in range(instance.rounds - 1):
        merged: Dict[int, float] = {}
        for key, weight in branches.items():
            for held, probability in run_round(instance, key, per_round_queries, table).items():
                merged[held] = merged.get(held, 0.0) + weight * probability
        branches = merged
        round_success.append(branches.get(instance.keys[k + 1], 0.0))
        logger.debug("round %d: P(holding s_%d) = %.6g", k, k + 1, round_success[-1])

    return ChainedGroverResult(success_probability=branches.get(target, 0.0),
                               total_queries=used * (instance.rounds - 1),
                               per_round_queries=per_round_queries,
                               round_success=round_success)
