import math
import warnings

import numpy as np
from numpy.typing import NDArray

from src.core.exceptions import ClippedScaleWarning, InvalidArgumentError
from src.core.models import SearchInstance
from src.utils import stream


def make_search_instance(n_items: int, rounds: int, key_bits: int, seed: int, warn: bool = True) -> SearchInstance:
    """
    Random items a_0..a_{K-1} and distinct keys s_0 = 0, s_1..s_{K-1} != 0 drawn from
    stream(seed, "instance", "search"). Warns when d < 10 K ln N.
    """
    if 2 ** key_bits < rounds:
        raise InvalidArgumentError(f"{key_bits} key bits cannot hold {rounds} distinct keys")
    if warn and n_items > 1 and key_bits < 10.0 * rounds * math.log(n_items):
        warnings.warn(f"Key length {key_bits} is below 10 K ln N = {10.0 * rounds * math.log(n_items):.1f}",
                      ClippedScaleWarning,
                      stacklevel=2)

    rng = stream(seed, "instance", "search")
    items = rng.integers(n_items, size=rounds)
    keys = rng.choice(2 ** key_bits - 1, size=rounds - 1, replace=False) + 1
    return SearchInstance(n_items=n_items,
                          rounds=rounds,
                          key_bits=key_bits,
                          items=tuple(int(a) for a in items),
                          keys=(0, *(int(s) for s in keys)),
                          seed=seed)


def f_search(a: int, s: int, instance: SearchInstance) -> int:
    """
    s_{i+1} when (a, s) = (a_i, s_i) for some i < K - 1, else 0. The last pair maps to 0.
    """
    if not 0 <= a < instance.n_items:
        raise InvalidArgumentError(f"Item {a} out of range [0, {instance.n_items})")
    for i in range(instance.rounds - 1):
        if a == instance.items[i] and s == instance.keys[i]:
            return instance.keys[i + 1]
    return 0


def search_table(instance: SearchInstance) -> NDArray[np.int64]:
    """
    F[s, a] = f_search(a, s) for every key and item.
    """
    table = np.zeros((instance.key_space, instance.n_items), dtype=np.int64)
    for i in range(instance.rounds - 1):
        table[instance.keys[i], instance.items[i]] = instance.keys[i + 1]
    return table
