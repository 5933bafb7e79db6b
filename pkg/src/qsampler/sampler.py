from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily, ISoftmaxSampler
from src.core.exceptions import InvalidArgumentError
from src.core.models import QueryLedger, SampleBatch, SamplingArm, SmoothingContext
from src.smoothing import center_values_and_weights
from .amplification import amplification_rounds
from .truncation import _check_delta, rejection_draw, top_k, top_k_of_values, truncated_from_values


def _check_count(count: int) -> None:
    if count < 1:
        raise InvalidArgumentError(f"Need at least one sample, got {count}")


class QuantumSoftmaxSampler(ISoftmaxSampler):
    """
    Emulation of the quantum softmax sampler. Samples come from exact rejection sampling
    against the truncated proposal; the ledger is charged the top-K formula once plus
    2 * amplification_rounds(p_hat) per sample.

    With inject_failure set, the top-K set is corrupted by one random swap with
    probability delta (drawn from failure_rng).
    """

    def __init__(self,
                 *,
                 stochastic_amplification: bool = False,
                 inject_failure: bool = False,
                 cost_rng: Optional[np.random.Generator] = None,
                 failure_rng: Optional[np.random.Generator] = None):
        self.stochastic_amplification = stochastic_amplification
        self.inject_failure = inject_failure
        self.cost_rng = cost_rng if cost_rng is not None else np.random.default_rng(0)
        self.failure_rng = failure_rng if failure_rng is not None else np.random.default_rng(1)
        self.failures = 0

    def sample(self,
               family: IFunctionFamily,
               center: NDArray[np.float64],
               count: int,
               delta: float,
               ctx: SmoothingContext,
               ledger: QueryLedger,
               rng: np.random.Generator) -> SampleBatch:
        _check_count(count)
        _check_delta(delta)
        center = np.asarray(center, dtype=np.float64)
        n = family.n_functions
        k = min(count, n)

        with ledger.phase("sampling"):
            before = ledger.quantum_charged
            top_set = top_k(family, center, k, delta, ledger)
            topk_charge = ledger.quantum_charged - before

            corrupted = False
            if self.inject_failure and k < n and self.failure_rng.random() < delta:
                top_set = self._corrupt(top_set, n)
                corrupted = True
                self.failures += 1

            values = family.values(center)
            truncated = truncated_from_values(values, top_set, ctx.epsilon_prime, corrupted=corrupted)
            indices, trials = rejection_draw(values, truncated, count, ctx.epsilon_prime, rng)

            constants = ledger.cost_constants
            if self.stochastic_amplification:
                rounds = sum(amplification_rounds(truncated.success_prob, self.cost_rng,
                                                  c_amp=constants.c_amp, stochastic=True)
                             for _ in range(count))
            else:
                rounds = count * amplification_rounds(truncated.success_prob, c_amp=constants.c_amp)
            # every circuit call queries the oracle twice
            amplification_charge = 2 * rounds
            ledger.charge_formula(amplification_charge)

        return SampleBatch(indices=indices,
                           trials=trials,
                           topk_charge=topk_charge,
                           amplification_charge=amplification_charge,
                           distribution=truncated)

    def _corrupt(self, top_set: NDArray[np.int64], n: int) -> NDArray[np.int64]:
        outside = np.setdiff1d(np.arange(n), top_set)
        swapped = top_set.copy()
        swapped[self.failure_rng.integers(len(swapped))] = outside[self.failure_rng.integers(len(outside))]
        return np.sort(swapped)


class ClassicalSoftmaxSampler(ISoftmaxSampler):
    """
    Classical baseline: computes every p_i (N value queries, once per smoothing context)
    and then samples with the same law and generator usage as the quantum sampler.
    """

    def sample(self,
               family: IFunctionFamily,
               center: NDArray[np.float64],
               count: int,
               delta: float,
               ctx: SmoothingContext,
               ledger: QueryLedger,
               rng: np.random.Generator) -> SampleBatch:
        _check_count(count)
        _check_delta(delta)
        center = np.asarray(center, dtype=np.float64)

        with ledger.phase("sampling"):
            before = ledger.quantum_charged
            values, _ = center_values_and_weights(family, center, ctx, ledger)
            weights_charge = ledger.quantum_charged - before

        top_set = top_k_of_values(values, min(count, family.n_functions))
        truncated = truncated_from_values(values, top_set, ctx.epsilon_prime)
        indices, trials = rejection_draw(values, truncated, count, ctx.epsilon_prime, rng)
        return SampleBatch(indices=indices, trials=trials, weights_charge=weights_charge, distribution=truncated)


def make_sampler(arm: SamplingArm | str,
                 *,
                 stochastic_amplification: bool = False,
                 inject_failure: bool = False,
                 cost_rng: Optional[np.random.Generator] = None,
                 failure_rng: Optional[np.random.Generator] = None) -> ISoftmaxSampler:
    match str(arm):
        case "quantum":
            return QuantumSoftmaxSampler(stochastic_amplification=stochastic_amplification,
                                         inject_failure=inject_failure,
                                         cost_rng=cost_rng,
                                         failure_rng=failure_rng)
        case "classical":
            return ClassicalSoftmaxSampler()
        case _:
            raise InvalidArgumentError(f"Unsupported sampling arm: {arm}")


def sample_batch(family: IFunctionFamily,
                 center: NDArray[np.float64],
                 t_samples: int,
                 delta: float,
                 ctx: SmoothingContext,
                 ledger: QueryLedger,
                 rng: np.random.Generator,
                 sampler: Optional[ISoftmaxSampler] = None) -> NDArray[np.int64]:
    """
    T_samples i.i.d. softmax draws at center. Charged under the quantum cost model unless
    another sampler (e.g. one with stochastic amplification or failure injection) is given.
    """
    if sampler is None:
        sampler = QuantumSoftmaxSampler()
    return sampler.sample(family, center, t_samples, delta, ctx, ledger, rng).indices
