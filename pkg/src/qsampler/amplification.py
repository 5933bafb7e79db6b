import math
from typing import Optional

import numpy as np

from src.core.exceptions import InternalError


def amplification_rounds(p_hat: float,
                         rng: Optional[np.random.Generator] = None,
                         *,
                         c_amp: float = 1.0,
                         stochastic: bool = False) -> int:
    """
    Circuit calls charged for one amplitude amplification run at success probability p_hat:
    ceil(c_amp / sqrt(p_hat)), or in stochastic mode ceil(c_amp * G) for a geometric draw G with
    mean 1/sqrt(p_hat).
    """
    if not p_hat > 0.0:
        raise InternalError(f"Amplification needs a positive success probability, got {p_hat}")
    p_hat = min(p_hat, 1.0)

    if stochastic:
        if rng is None:
            raise InternalError("Stochastic amplification needs a random generator")
        return max(1, math.ceil(c_amp * int(rng.geometric(math.sqrt(p_hat))) - 1e-9))
    return max(1, math.ceil(c_amp / math.sqrt(p_hat) - 1e-9))
