import math
from pathlib import Path
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily, IProgressArm
from src.core.exceptions import InvalidArgumentError
from src.core.models import ProgressTrace, QueryLedger
from src.problem import evaluate_all, subgradient_query
from src.utils import write_csv

TRACE_HEADER = ["query_index", "prog", "cumulative_charge"]


class ProgressRecorder(IFunctionFamily):
    """
    Wraps a hard family and appends prog(U^T x) of every point it is queried at
    (or shown through observe) to a ProgressTrace.
    """

    def __init__(self, family: IFunctionFamily, ledger: QueryLedger):
        if not hasattr(family, "progress"):
            raise InvalidArgumentError(f"{type(family).__name__} does not expose progress")
        super().__init__(n_functions=family.n_functions,
                         dim=family.dim,
                         lipschitz=family.lipschitz,
                         smoothness=family.smoothness,
                         domain_radius=family.domain_radius,
                         domain_center=family.domain_center)
        self.family = family
        self.ledger = ledger
        self.trace = ProgressTrace()

    def observe(self, x: NDArray[np.float64]) -> int:
        progress = self.family.progress(x)
        self.trace.append(x, progress, self.ledger.quantum_charged)
        return progress

    def value(self, i: int, x: NDArray[np.float64]) -> float:
        self.observe(x)
        return self.family.value(i, x)

    def gradient(self, i: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
        self.observe(x)
        return self.family.gradient(i, x)

    def values(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        self.observe(x)
        return self.family.values(x)

    def gradients(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        self.observe(x)
        return self.family.gradients(x)


def uniform_ball(rng: np.random.Generator, dim: int, radius: float) -> NDArray[np.float64]:
    direction = rng.standard_normal(dim)
    direction /= np.linalg.norm(direction)
    return radius * rng.uniform() ** (1.0 / dim) * direction


class GuessingArm(IProgressArm):
    """
    Oracle-free baseline: `budget` uniform guesses in the domain ball, none of them charged.
    """

    name = "guessing"

    def run(self, family: IFunctionFamily, budget: int, ledger: QueryLedger, rng: np.random.Generator) -> None:
        if not isinstance(family, ProgressRecorder):
            raise InvalidArgumentError("GuessingArm needs a ProgressRecorder to report its guesses to")
        for _ in range(budget):
            family.observe(family.domain_center + uniform_ball(rng, family.dim, family.domain_radius))


class SubgradientArm(IProgressArm):
    """
    Projected subgradient on the max over all N functions, started at the domain center.
    One step costs N value queries plus one gradient query.
    """

    name = "subgradient"

    def run(self, family: IFunctionFamily, budget: int, ledger: QueryLedger, rng: np.random.Generator) -> None:
        steps = budget // (family.n_functions + 1)
        if steps == 0:
            return
        eta = family.domain_radius / (family.lipschitz * math.sqrt(steps))
        x = family.domain_center.copy()
        for _ in range(steps):
            with ledger.phase("argmax"):
                active = int(np.argmax(evaluate_all(family, x, ledger)))
            with ledger.phase("gradient"):
                g = subgradient_query(family, active, x, ledger)
            x = x - eta * g
            offset = x - family.domain_center
            distance = float(np.linalg.norm(offset))
            if distance > family.domain_radius:
                x = family.domain_center + offset * (family.domain_radius / distance)


def make_progress_arm(name: str) -> IProgressArm:
    match name:
        case "guessing":
            return GuessingArm()
        case "subgradient":
            return SubgradientArm()
        case _:
            raise InvalidArgumentError(f"Unsupported progress arm: {name}")


def run_progress_experiment(arm: IProgressArm,
                            family: IFunctionFamily,
                            budget: int,
                            ledger: QueryLedger,
                            rng: Optional[np.random.Generator] = None) -> ProgressTrace:
    """
    Runs `arm` against `family` and returns the prog value of every point it touched.
    """
    if budget < 0:
        raise InvalidArgumentError(f"Budget must be nonnegative, got {budget}")
    recorder = ProgressRecorder(family, ledger)
    arm.run(recorder, budget, ledger, rng if rng is not None else np.random.default_rng(0))
    return recorder.trace


def guess_rate(trace: ProgressTrace, chain_len: int) -> float:
    """
    Fraction of recorded points with prog >= T.
    """
    if not len(trace):
        return 0.0
    return sum(record.prog >= chain_len for record in trace.records) / len(trace)


def write_trace_csv(path: str | Path, trace: ProgressTrace) -> Path:
    return write_csv(path, TRACE_HEADER, (
        {"query_index": r.query_index, "prog": r.prog, "cumulative_charge": r.cumulative_charge}
        for r in trace.records
    ))
