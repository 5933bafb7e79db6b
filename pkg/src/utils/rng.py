import zlib
from typing import Union

import numpy as np


def stream_key(key: Union[int, str]) -> int:
    """
    Maps a stream key to a nonnegative integer. Strings go through crc32 so the
    mapping is stable across processes.
    """
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    if isinstance(key, bool) or int(key) < 0:
        raise ValueError(f"Stream keys must be nonnegative integers or strings, got {key!r}")
    return int(key)


def stream(seed: int, *keys: Union[int, str]) -> np.random.Generator:
    """
    Independent counter-based generator for (seed, *keys), e.g.
    stream(seed, trial, call_id, "sampling").
    """
    entropy = [stream_key(seed)] + [stream_key(k) for k in keys]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
