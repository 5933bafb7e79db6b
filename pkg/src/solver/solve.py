import logging
from pathlib import Path
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily
from src.core.exceptions import ConfigError, InvalidArgumentError
from src.core.models import ExperimentConfig, FamilyKind, InstanceSpec, Method, QueryLedger, SolveReport
from src.hardness import make_shuffled_instance, scaled_hard_family
from src.problem import make_affine_family, make_symmetric_affine_family
from src.qsampler import make_sampler
from src.utils import stream, write_json
from .prox_outer import prox_outer
from .strategy import make_strategy
from .subgradient import subgradient_method

logger = logging.getLogger(__name__)


def make_family(spec: InstanceSpec, epsilon: float) -> Tuple[IFunctionFamily, NDArray[np.float64]]:
    """
    Builds the configured family and its start point x0 (the domain center unless given).
    """
    match spec.family:
        case FamilyKind.AFFINE:
            family = make_affine_family(spec.seed, spec.n_functions, spec.dim, spec.lipschitz, spec.radius)
        case FamilyKind.SYMMETRIC_AFFINE:
            family = make_symmetric_affine_family(spec.dim, spec.lipschitz, spec.radius)
        case FamilyKind.SHUFFLED_HARD:
            family = make_shuffled_instance(spec.seed,
                                            spec.chain_len,
                                            spec.n_functions,
                                            spec.smoothness or 0.0,
                                            min(spec.dim, spec.d_cap))
        case FamilyKind.SCALED_HARD:
            if spec.smoothness is None:
                raise ConfigError("instance.smoothness", "scaled_hard needs instance.smoothness (L_g)")
            family = scaled_hard_family(spec.lipschitz,
                                        spec.smoothness,
                                        spec.radius,
                                        epsilon,
                                        spec.n_functions,
                                        spec.seed,
                                        d_cap=spec.d_cap)
        case _:
            raise InvalidArgumentError(f"Unsupported family: {spec.family}")

    if spec.start is None:
        start = family.domain_center.copy()
    else:
        start = np.asarray(spec.start, dtype=np.float64)
        if start.shape != (family.dim,):
            raise ConfigError("instance.start", f"instance.start must have {family.dim} entries, got {start.shape[0]}")
    return family, start


def solve(config: ExperimentConfig, trial: int = 0) -> SolveReport:
    """
    Runs the configured method on the configured instance. With out_dir set the report is
    written to report.json (report_<trial>.json for trial > 0).
    """
    family, start = make_family(config.instance, config.epsilon)
    ledger = QueryLedger(cost_constants=config.cost_constants)
    radius = config.instance.radius

    match config.method:
        case Method.SUBGRADIENT:
            report = subgradient_method(family, start, radius, config.epsilon, ledger)
        case Method.PROX_OUTER:
            sampler = make_sampler(config.arm,
                                   stochastic_amplification=config.stochastic_amplification,
                                   inject_failure=config.inject_failure,
                                   cost_rng=stream(config.seed, trial, "cost"),
                                   failure_rng=stream(config.seed, trial, "failure"))
            report = prox_outer(family,
                                start,
                                radius,
                                config.epsilon,
                                ledger,
                                strategy=make_strategy(config.strategy, sampler),
                                seed=config.seed,
                                trial=trial)
            report.arm = str(config.arm)
        case _:
            raise InvalidArgumentError(f"Unsupported method: {config.method}")

    report.config_echo = config.to_dict()
    logger.info("solve trial %d: %s suboptimality %s", trial, report.method, report.suboptimality_estimate)

    if config.out_dir is not None:
        name = "report.json" if trial == 0 else f"report_{trial}.json"
        write_json(Path(config.out_dir) / name, report.to_dict())
    return report
