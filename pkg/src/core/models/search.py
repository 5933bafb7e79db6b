from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..exceptions import InvalidArgumentError, NonUnitaryError


class Register(Enum):
    KEY = "key"
    ITEM = "item"
    RESULT = "result"

    def __str__(self):
        return self.value

    @property
    def axis(self) -> int:
        return {"key": 0, "item": 1, "result": 2}[self.value]


class StepKind(Enum):
    IDENTITY = "identity"
    HADAMARD = "hadamard"
    UNIFORM_ITEM = "uniform_item"
    DIFFUSION = "diffusion"
    KEY_COPY = "key_copy"
    PHASE_NONZERO_RESULT = "phase_nonzero_result"
    MATRIX = "matrix"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SearchInstance:
    """
    Multi-round search: item a_k is marked under key s_k, and querying (a_k, s_k)
    reveals s_{k+1}. Keys are d-bit strings stored as integers, s_0 = 0.
    """
    n_items: int
    rounds: int
    key_bits: int
    items: Tuple[int, ...]
    keys: Tuple[int, ...]
    seed: int

    def __post_init__(self):
        if self.n_items < 1 or self.rounds < 1 or self.key_bits < 1:
            raise InvalidArgumentError("n_items, rounds and key_bits must be positive")
        if len(self.items) != self.rounds or len(self.keys) != self.rounds:
            raise InvalidArgumentError("items and keys must have one entry per round")
        if any(not 0 <= a < self.n_items for a in self.items):
            raise InvalidArgumentError("items must lie in [0, n_items)")
        if self.keys[0] != 0:
            raise InvalidArgumentError("The first key must be the all-zeros string")
        if len(set(self.keys)) != len(self.keys):
            raise InvalidArgumentError("Keys must be pairwise distinct")
        if any(not 0 <= s < 2 ** self.key_bits for s in self.keys):
            raise InvalidArgumentError("Keys must fit in key_bits bits")

    @property
    def key_space(self) -> int:
        return 2 ** self.key_bits

    @property
    def amplitudes(self) -> int:
        return self.key_space * self.n_items * self.key_space


@dataclass
class SearchState:
    """
    Dense amplitudes indexed [key, item, result].
    """
    amplitudes: NDArray[np.complex128]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes.ravel()))

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.amplitudes.shape

    def copy(self) -> SearchState:
        return SearchState(self.amplitudes.copy())


@dataclass(frozen=True)
class AdversaryStep:
    """
    Oracle-independent unitary applied between search oracle calls.
    key_value restricts a DIFFUSION to one value of the key register.
    """
    kind: StepKind
    register: Register = Register.ITEM
    matrix: Optional[NDArray[np.complex128]] = None
    key_value: Optional[int] = None

    def __post_init__(self):
        if self.kind is StepKind.MATRIX:
            if self.matrix is None:
                raise InvalidArgumentError("MATRIX steps need a matrix")
            m = np.asarray(self.matrix)
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise InvalidArgumentError(f"Step matrix must be square, got shape {m.shape}")
            deviation = float(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])))
            if deviation > 1e-8:
                raise NonUnitaryError(deviation)


@dataclass
class ChainedGroverResult:
    success_probability: float
    total_queries: int
    per_round_queries: int
    round_success: List[float] = field(default_factory=list)
