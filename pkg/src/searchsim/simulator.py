from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import hadamard as hadamard_matrix

from src.core.exceptions import InvalidArgumentError, SimulationSizeError
from src.core.models import AdversaryStep, Register, SearchInstance, SearchState, StepKind
from .instance import search_table


def check_size(instance: SearchInstance, cap: int) -> None:
    if instance.amplitudes > cap:
        raise SimulationSizeError(instance.amplitudes, cap)


def initial_state(instance: SearchInstance, key: int = 0, item: int = 0, result: int = 0) -> SearchState:
    amplitudes = np.zeros((instance.key_space, instance.n_items, instance.key_space), dtype=np.complex128)
    amplitudes[key, item, result] = 1.0
    return SearchState(amplitudes)


def apply_search_oracle(state: SearchState,
                        instance: SearchInstance,
                        table: Optional[NDArray[np.int64]] = None) -> SearchState:
    """
    |s>|a>|r> -> |s>|a>|r XOR F(a, s)>.
    """
    if table is None:
        table = search_table(instance)
    results = np.arange(instance.key_space)
    source = results[None, None, :] ^ table[:, :, None]
    return SearchState(np.take_along_axis(state.amplitudes, source, axis=2))


# ============================================
# Adversary steps
# ============================================

def identity_step() -> AdversaryStep:
    return AdversaryStep(StepKind.IDENTITY)


def hadamard(register: Register) -> AdversaryStep:
    return AdversaryStep(StepKind.HADAMARD, register=register)


def uniform_item() -> AdversaryStep:
    return AdversaryStep(StepKind.UNIFORM_ITEM)


def diffusion(key_value: Optional[int] = None) -> AdversaryStep:
    return AdversaryStep(StepKind.DIFFUSION, key_value=key_value)


def key_copy() -> AdversaryStep:
    return AdversaryStep(StepKind.KEY_COPY)


def phase_on_nonzero_result() -> AdversaryStep:
    return AdversaryStep(StepKind.PHASE_NONZERO_RESULT)


def matrix_step(matrix: NDArray[np.complex128], register: Register = Register.ITEM) -> AdversaryStep:
    return AdversaryStep(StepKind.MATRIX, register=register, matrix=np.asarray(matrix, dtype=np.complex128))


def _uniform(n: int) -> NDArray[np.float64]:
    return np.full(n, 1.0 / np.sqrt(n))


def _householder_to_uniform(n: int) -> NDArray[np.float64]:
    """
    Real reflection swapping |0> and the uniform superposition.
    """
    v = -_uniform(n)
    v[0] += 1.0
    norm = np.linalg.norm(v)
    if norm == 0.0:
        return np.eye(n)
    v /= norm
    return np.eye(n) - 2.0 * np.outer(v, v)


def _apply_on_axis(amplitudes: NDArray[np.complex128], matrix: NDArray, axis: int) -> NDArray[np.complex128]:
    if matrix.shape[0] != amplitudes.shape[axis]:
        raise InvalidArgumentError(
            f"Step acts on dimension {matrix.shape[0]}, register has dimension {amplitudes.shape[axis]}")
    return np.moveaxis(np.tensordot(matrix, amplitudes, axes=([1], [axis])), 0, axis)


def apply_adversary_step(state: SearchState, step: AdversaryStep) -> SearchState:
    amplitudes = state.amplitudes
    match step.kind:
        case StepKind.IDENTITY:
            return state.copy()
        case StepKind.HADAMARD:
            n = amplitudes.shape[step.register.axis]
            if n & (n - 1):
                raise InvalidArgumentError(f"Hadamard needs a power-of-two register, got dimension {n}")
            return SearchState(_apply_on_axis(amplitudes, hadamard_matrix(n) / np.sqrt(n), step.register.axis))
        case StepKind.UNIFORM_ITEM:
            return SearchState(_apply_on_axis(amplitudes, _householder_to_uniform(amplitudes.shape[1]), 1))
        case StepKind.DIFFUSION:
            n = amplitudes.shape[1]
            u = _uniform(n)
            reflect = 2.0 * np.outer(u, u) - np.eye(n)
            if step.key_value is None:
                return SearchState(_apply_on_axis(amplitudes, reflect, 1))
            out = amplitudes.copy()
            out[step.key_value] = reflect @ amplitudes[step.key_value]
            return SearchState(out)
        case StepKind.KEY_COPY:
            keys = np.arange(amplitudes.shape[0])
            results = np.arange(amplitudes.shape[2])
            return SearchState(amplitudes[keys[:, None] ^ results[None, :], :, results[None, :]].transpose(0, 2, 1))
        case StepKind.PHASE_NONZERO_RESULT:
            out = amplitudes.copy()
            out[:, :, 1:] *= -1.0
            return SearchState(out)
        case StepKind.MATRIX:
            return SearchState(_apply_on_axis(amplitudes, step.matrix, step.register.axis))
        case _:
            raise InvalidArgumentError(f"Unsupported adversary step: {step.kind}")


# ============================================
# Observables
# ============================================

def measure_register(state: SearchState, register: Register) -> NDArray[np.float64]:
    """
    Marginal distribution of one register.
    """
    probabilities = np.abs(state.amplitudes) ** 2
    others = tuple(axis for axis in range(3) if axis != register.axis)
    return probabilities.sum(axis=others)


def key_overlap(state: SearchState, k: int, instance: SearchInstance) -> float:
    """
    Norm of the component of the state whose key register holds s_k.
    """
    if not 0 <= k < instance.rounds:
        raise InvalidArgumentError(f"Key index {k} out of range [0, {instance.rounds})")
    return float(np.linalg.norm(state.amplitudes[instance.keys[k]]))


def expected_key_overlap(state: SearchState) -> float:
    """
    Mean over all key values s of the norm of the key = s component.
    """
    return float(np.mean(np.linalg.norm(state.amplitudes.reshape(state.shape[0], -1), axis=1)))
