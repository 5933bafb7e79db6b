from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np
from numpy.typing import NDArray

from ..exceptions import InvalidArgumentError


@dataclass(frozen=True)
class HardInstance:
    """
    Shuffled zero-chain: chain length T, N functions (the last N - T are zero),
    smoothness l, hidden d x T column-orthonormal rotation U and permutation Pi.
    permutation[j] = Pi(j) is the public index of chain function j.
    """
    chain_len: int
    n_functions: int
    smooth_param: float
    dim: int
    rotation: NDArray[np.float64]
    permutation: NDArray[np.int64]
    seed: int
    alpha: float = field(init=False)
    base_coord: float = field(init=False)
    inverse_permutation: NDArray[np.int64] = field(init=False, repr=False)

    def __post_init__(self):
        T = self.chain_len
        if T < 1:
            raise InvalidArgumentError(f"Chain length must be positive, got {T}")
        if self.n_functions < T:
            raise InvalidArgumentError(f"Need N >= T, got N={self.n_functions}, T={T}")
        if self.dim < T:
            raise InvalidArgumentError(f"Need d >= T, got d={self.dim}, T={T}")
        if self.smooth_param < 0:
            raise InvalidArgumentError(f"Smoothness l must be nonnegative, got {self.smooth_param}")
        if self.rotation.shape != (self.dim, T):
            raise InvalidArgumentError(f"Rotation must be {self.dim} x {T}, got {self.rotation.shape}")
        if not np.allclose(self.rotation.T @ self.rotation, np.eye(T), atol=1e-10, rtol=0.0):
            raise InvalidArgumentError("Rotation columns are not orthonormal")
        if sorted(self.permutation.tolist()) != list(range(self.n_functions)):
            raise InvalidArgumentError("Permutation is not a bijection on [N]")

        inverse = np.empty_like(self.permutation)
        inverse[self.permutation] = np.arange(self.n_functions)
        object.__setattr__(self, "alpha", 1.0 / (4.0 * T ** 1.5))
        object.__setattr__(self, "base_coord", 1.0 / math.sqrt(T))
        object.__setattr__(self, "inverse_permutation", inverse)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain_len": self.chain_len,
            "n_functions": self.n_functions,
            "smooth_param": self.smooth_param,
            "dim": self.dim,
            "alpha": self.alpha,
            "base_coord": self.base_coord,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ProgressRecord:
    query_index: int
    point: NDArray[np.float64]
    prog: int
    cumulative_charge: int


@dataclass
class ProgressTrace:
    records: List[ProgressRecord] = field(default_factory=list)
    max_prog: int = 0

    def append(self, point: NDArray[np.float64], prog: int, cumulative_charge: int) -> None:
        self.records.append(ProgressRecord(query_index=len(self.records),
                                           point=np.array(point, dtype=np.float64),
                                           prog=int(prog),
                                           cumulative_charge=int(cumulative_charge)))
        self.max_prog = max(self.max_prog, int(prog))

    def running_max(self) -> List[int]:
        out, best = [], 0
        for record in self.records:
            best = max(best, record.prog)
            out.append(best)
        return out

    def __len__(self) -> int:
        return len(self.records)
