from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

from ..exceptions import ConfigError
from .broo import BrooConvention
from .ledger import CostConstants
from .sampling import SamplingArm


# ============================================
# Enums
# ============================================

class Command(Enum):
    SOLVE = "solve"
    BENCH_SAMPLER = "bench-sampler"
    BENCH_SCALING = "bench-scaling"
    HARDNESS = "hardness"
    SEARCHSIM = "searchsim"

    def __str__(self):
        return self.value


class Method(Enum):
    SUBGRADIENT = "subgradient"
    PROX_OUTER = "prox_outer"

    def __str__(self):
        return self.value


class FamilyKind(Enum):
    AFFINE = "affine"
    SYMMETRIC_AFFINE = "symmetric_affine"
    SHUFFLED_HARD = "shuffled_hard"
    SCALED_HARD = "scaled_hard"

    def __str__(self):
        return self.value


# ============================================
# Field converters
# ============================================

def _positive_int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"expected a positive integer, got {value!r}")
    return value


def _nonneg_int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"expected a nonnegative integer, got {value!r}")
    return value


def _positive_float(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
        raise ValueError(f"expected a positive number, got {value!r}")
    return float(value)


def _nonneg_float(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value < 0:
        raise ValueError(f"expected a nonnegative number, got {value!r}")
    return float(value)


def _probability(value: Any) -> float:
    value = _positive_float(value)
    if value >= 1.0:
        raise ValueError(f"expected a number in (0, 1), got {value!r}")
    return value


def _optional(convert: Callable[[Any], Any]) -> Callable[[Any], Any]:
    return lambda value: None if value is None else convert(value)


def _tuple_of(convert: Callable[[Any], Any]) -> Callable[[Any], Tuple[Any, ...]]:
    def _convert(value: Any) -> Tuple[Any, ...]:
        if not isinstance(value, list) or not value:
            raise ValueError(f"expected a non-empty list, got {value!r}")
        return tuple(convert(v) for v in value)
    return _convert


def _float_list(value: Any) -> Tuple[float, ...]:
    if not isinstance(value, list):
        raise ValueError(f"expected a list of numbers, got {value!r}")
    return tuple(float(v) for v in value)


def _enum(enum_cls: type) -> Callable[[Any], Any]:
    def _convert(value: Any):
        try:
            return enum_cls(value)
        except ValueError:
            allowed = ", ".join(member.value for member in enum_cls)
            raise ValueError(f"expected one of {allowed}, got {value!r}")
    return _convert


def _bool(value: Any) -> bool:
    if not isinstance(value, bool):
        raise ValueError(f"expected true or false, got {value!r}")
    return value


def _string(value: Any) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError(f"expected a non-empty string, got {value!r}")
    return value


def _section(cls: type, data: Any, prefix: str, converters: Dict[str, Callable[[Any], Any]]):
    if data is None:
        return cls()
    if not isinstance(data, dict):
        raise ConfigError(prefix.rstrip("."), f"Section '{prefix.rstrip('.')}' must be an object")
    kwargs = {}
    for key, value in data.items():
        if key not in converters:
            raise ConfigError(f"{prefix}{key}", f"Unknown configuration key '{prefix}{key}'")
        try:
            kwargs[key] = converters[key](value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{prefix}{key}", f"Invalid value for '{prefix}{key}': {exc}") from exc
    return cls(**kwargs)


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if dataclasses.is_dataclass(value):
        return {f.name: _plain(getattr(value, f.name)) for f in fields(value)}
    return value


# ============================================
# Sections
# ============================================

@dataclass(frozen=True)
class InstanceSpec:
    """
    Which function family to build.
    smoothness is L_g for scaled_hard and l for shuffled_hard; start is x0
    (defaults to the domain center).
    """
    family: FamilyKind = FamilyKind.AFFINE
    n_functions: int = 8
    dim: int = 2
    lipschitz: float = 1.0
    smoothness: Optional[float] = None
    radius: float = 1.0
    seed: int = 0
    chain_len: int = 3
    d_cap: int = 64
    start: Optional[Tuple[float, ...]] = None


_INSTANCE_FIELDS = {
    "family": _enum(FamilyKind),
    "n_functions": _positive_int,
    "dim": _positive_int,
    "lipschitz": _positive_float,
    "smoothness": _optional(_nonneg_float),
    "radius": _positive_float,
    "seed": _nonneg_int,
    "chain_len": _positive_int,
    "d_cap": _positive_int,
    "start": _optional(_float_list),
}


@dataclass(frozen=True)
class SweepSpec:
    n_values: Tuple[int, ...] = tuple(2 ** k for k in range(6, 15))
    t_samples: int = 64
    delta: float = 1e-3
    dim: int = 2
    epsilon: float = 0.1
    exactness_n: int = 64
    exactness_draws: int = 100_000


_SWEEP_FIELDS = {
    "n_values": _tuple_of(_positive_int),
    "t_samples": _positive_int,
    "delta": _probability,
    "dim": _positive_int,
    "epsilon": _positive_float,
    "exactness_n": _positive_int,
    "exactness_draws": _positive_int,
}


@dataclass(frozen=True)
class HardnessSpec:
    chain_len: int = 3
    n_values: Tuple[int, ...] = (8, 16, 32)
    smooth_param: float = 1.0
    dim: int = 20
    budget: int = 200
    arm: str = "subgradient"
    delta: float = 1.0 / 3.0


_HARDNESS_FIELDS = {
    "chain_len": _positive_int,
    "n_values": _tuple_of(_positive_int),
    "smooth_param": _nonneg_float,
    "dim": _positive_int,
    "budget": _nonneg_int,
    "arm": _string,
    "delta": _probability,
}


@dataclass(frozen=True)
class SearchSpec:
    n_items: int = 4
    rounds: Tuple[int, ...] = (1, 2, 3)
    key_bits: int = 2
    per_round_queries: Tuple[int, ...] = (0, 1, 3)
    cap: int = 2 ** 20


_SEARCH_FIELDS = {
    "n_items": _positive_int,
    "rounds": _tuple_of(_positive_int),
    "key_bits": _positive_int,
    "per_round_queries": _tuple_of(_nonneg_int),
    "cap": _positive_int,
}


@dataclass(frozen=True)
class ExperimentConfig:
    command: Command = Command.SOLVE
    seed: int = 0
    trials: int = 1
    jobs: int = 1
    out_dir: Optional[str] = None
    method: Method = Method.PROX_OUTER
    arm: SamplingArm = SamplingArm.QUANTUM
    strategy: str = "simple-proximal"
    epsilon: float = 0.5
    convention: BrooConvention = BrooConvention.SQUARED
    stochastic_amplification: bool = False
    inject_failure: bool = False
    instance: InstanceSpec = field(default_factory=InstanceSpec)
    cost_constants: CostConstants = field(default_factory=CostConstants)
    sweep: SweepSpec = field(default_factory=SweepSpec)
    hardness: HardnessSpec = field(default_factory=HardnessSpec)
    search: SearchSpec = field(default_factory=SearchSpec)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> ExperimentConfig:
        if not isinstance(data, dict):
            raise ConfigError("<root>", "Configuration must be a JSON object")

        scalar_fields = {
            "command": _enum(Command),
            "seed": _nonneg_int,
            "trials": _positive_int,
            "jobs": _positive_int,
            "out_dir": _optional(_string),
            "method": _enum(Method),
            "arm": _enum(SamplingArm),
            "strategy": _string,
            "epsilon": _positive_float,
            "convention": _enum(BrooConvention),
            "stochastic_amplification": _bool,
            "inject_failure": _bool,
        }
        sections = {"instance", "cost_constants", "sweep", "hardness", "search"}

        kwargs: Dict[str, Any] = {}
        for key, value in data.items():
            if key in sections:
                continue
            if key not in scalar_fields:
                raise ConfigError(key, f"Unknown configuration key '{key}'")
            try:
                kwargs[key] = scalar_fields[key](value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(key, f"Invalid value for '{key}': {exc}") from exc

        kwargs["instance"] = _section(InstanceSpec, data.get("instance"), "instance.", _INSTANCE_FIELDS)
        kwargs["sweep"] = _section(SweepSpec, data.get("sweep"), "sweep.", _SWEEP_FIELDS)
        kwargs["hardness"] = _section(HardnessSpec, data.get("hardness"), "hardness.", _HARDNESS_FIELDS)
        kwargs["search"] = _section(SearchSpec, data.get("search"), "search.", _SEARCH_FIELDS)

        constants = data.get("cost_constants")
        if constants is not None:
            if not isinstance(constants, dict):
                raise ConfigError("cost_constants", "Section 'cost_constants' must be an object")
            kwargs["cost_constants"] = CostConstants.from_dict(constants)

        return cls(**kwargs)

    def with_overrides(self,
                       seed: Optional[int] = None,
                       out_dir: Optional[str] = None,
                       trials: Optional[int] = None,
                       jobs: Optional[int] = None) -> ExperimentConfig:
        changes: Dict[str, Any] = {}
        if seed is not None:
            changes["seed"] = seed
        if out_dir is not None:
            changes["out_dir"] = out_dir
        if trials is not None:
            changes["trials"] = trials
        if jobs is not None:
            changes["jobs"] = jobs
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """
        Plain JSON-ready echo of the configuration (out_dir and jobs excluded, they
        do not change results).
        """
        echo = _plain(self)
        echo.pop("out_dir", None)
        echo.pop("jobs", None)
        return echo
