from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import numpy as np
from scipy.stats import linregress

from src.utils import stream

Task = TypeVar("Task")
Result = TypeVar("Result")


def run_trials(fn: Callable[[Task], Result], tasks: Sequence[Task], jobs: int) -> List[Result]:
    """
    Maps fn over tasks on a pool of `jobs` threads; results come back in task order.
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, tasks))


def trial_seed(seed: int, trial: int, *keys) -> int:
    """
    Instance seed of one trial, drawn from stream(seed, trial, *keys, "trial").
    """
    return int(stream(seed, trial, *keys, "trial").integers(2 ** 31 - 1))


def loglog_fit(n_values: Sequence[float], costs: Sequence[float]):
    return linregress(np.log(np.asarray(n_values, dtype=np.float64)), np.log(np.asarray(costs, dtype=np.float64)))
