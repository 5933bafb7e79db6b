import dataclasses
import logging
import statistics
import warnings
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from src.core.exceptions import ClippedScaleWarning
from src.core.models import (
    ExperimentConfig,
    FamilyKind,
    Method,
    QueryLedger,
    SamplingArm,
    SmoothingContext,
)
from src.hardness import (
    guess_rate,
    guess_success_bound,
    make_progress_arm,
    make_shuffled_instance,
    required_dimension,
    run_progress_experiment,
    write_trace_csv,
)
from src.problem import make_affine_family
from src.qsampler import chi_square_pvalue, exact_softmax, make_sampler, tv_distance
from src.searchsim import make_search_instance, run_chained_grover
from src.solver import solve
from src.utils import stream, write_csv, write_json
from .runner import loglog_fit, run_trials, trial_seed

logger = logging.getLogger(__name__)

SAMPLER_HEADER = ["n_functions", "arm", "trial", "t_samples", "charged", "sampling_charged", "success_prob", "tv_distance"]
SAMPLER_FIT_HEADER = ["arm", "slope", "intercept", "r_value"]
SCALING_HEADER = ["n_functions", "arm", "trial", "epsilon", "charged", "sampling_charged", "suboptimality"]
HARDNESS_HEADER = ["n_functions", "chain_len", "dim", "arm", "trial", "queries", "max_prog",
                   "queries_per_progress", "guess_rate", "guess_bound"]
SEARCH_HEADER = ["K", "d", "N", "queries", "success_prob", "seed"]

ARMS = (SamplingArm.QUANTUM, SamplingArm.CLASSICAL)


def _out_dir(config: ExperimentConfig) -> Path:
    return Path(config.out_dir or "results")


# ============================================
# solve
# ============================================

def cmd_solve(config: ExperimentConfig) -> int:
    config = dataclasses.replace(config, out_dir=str(_out_dir(config)))
    reports = run_trials(lambda trial: solve(config, trial), range(config.trials), config.jobs)

    gaps = [r.suboptimality_estimate for r in reports if r.suboptimality_estimate is not None]
    gap = f"{statistics.median(gaps):.6g}" if gaps else "n/a"
    charged = statistics.median(r.ledger_snapshot.quantum_charged for r in reports)
    arm = f" arm={config.arm}" if config.method is Method.PROX_OUTER else ""
    print(f"[solve] method={config.method}{arm} trials={config.trials} "
          f"median_suboptimality={gap} median_charged={charged:g} out={config.out_dir}")
    return 0


# ============================================
# bench-sampler
# ============================================

def _sampler_row(config: ExperimentConfig, n: int, arm: SamplingArm, trial: int) -> Dict[str, Any]:
    sweep = config.sweep
    family = make_affine_family(config.seed, n, sweep.dim, 1.0, 1.0)
    center = np.zeros(sweep.dim)
    ctx = SmoothingContext.create(sweep.epsilon, n, family.lipschitz, center)
    ledger = QueryLedger(cost_constants=config.cost_constants)
    sampler = make_sampler(arm,
                           stochastic_amplification=config.stochastic_amplification,
                           cost_rng=stream(config.seed, trial, n, "cost"))

    batch = sampler.sample(family, center, sweep.t_samples, sweep.delta, ctx, ledger, stream(config.seed, trial, n, "sampling"))
    exact = exact_softmax(family.values(center), ctx.epsilon_prime)
    return {
        "n_functions": n,
        "arm": str(arm),
        "trial": trial,
        "t_samples": sweep.t_samples,
        "charged": ledger.quantum_charged,
        "sampling_charged": ledger.phase_charges.get("sampling", 0),
        "success_prob": batch.distribution.success_prob,
        "tv_distance": tv_distance(batch.indices, exact),
    }


def _exactness_summary(config: ExperimentConfig) -> Dict[str, Any]:
    sweep = config.sweep
    n = sweep.exactness_n
    family = make_affine_family(config.seed, n, sweep.dim, 1.0, 1.0)
    center = np.zeros(sweep.dim)
    ctx = SmoothingContext.create(sweep.epsilon, n, family.lipschitz, center)
    sampler = make_sampler(SamplingArm.QUANTUM)
    batch = sampler.sample(family, center, sweep.exactness_draws, sweep.delta, ctx,
                           QueryLedger(cost_constants=config.cost_constants), stream(config.seed, "exactness", "sampling"))
    exact = exact_softmax(family.values(center), ctx.epsilon_prime)
    return {
        "n_functions": n,
        "draws": sweep.exactness_draws,
        "tv_distance": tv_distance(batch.indices, exact),
        "chi_square_pvalue": chi_square_pvalue(batch.indices, exact),
        "acceptance_rate": batch.acceptance_rate,
        "success_prob": batch.distribution.success_prob,
    }


def cmd_bench_sampler(config: ExperimentConfig) -> int:
    out = _out_dir(config)
    tasks = [(n, arm, trial) for n in config.sweep.n_values for arm in ARMS for trial in range(config.trials)]
    rows = run_trials(lambda task: _sampler_row(config, *task), tasks, config.jobs)
    write_csv(out / "bench_sampler.csv", SAMPLER_HEADER, rows)

    fits: List[Dict[str, Any]] = []
    for arm in ARMS:
        mine = [r for r in rows if r["arm"] == str(arm)]
        if len({r["n_functions"] for r in mine}) < 2:
            continue
        fit = loglog_fit([r["n_functions"] for r in mine], [r["charged"] for r in mine])
        fits.append({"arm": str(arm), "slope": fit.slope, "intercept": fit.intercept, "r_value": fit.rvalue})
    write_csv(out / "bench_sampler_fit.csv", SAMPLER_FIT_HEADER, fits)

    exactness = _exactness_summary(config)
    write_json(out / "bench_sampler_exactness.json", exactness)

    slopes = " ".join(f"{f['arm']}_slope={f['slope']:.3f}" for f in fits)
    print(f"[bench-sampler] rows={len(rows)} {slopes} "
          f"tv={exactness['tv_distance']:.4f} chi2_p={exactness['chi_square_pvalue']:.3g} out={out}")
    return 0


# ============================================
# bench-scaling
# ============================================

def _scaling_row(config: ExperimentConfig, n: int, arm: SamplingArm, trial: int) -> Dict[str, Any]:
    sweep = config.sweep
    instance = dataclasses.replace(config.instance, family=FamilyKind.AFFINE, n_functions=n, dim=sweep.dim, start=None)
    run_config = dataclasses.replace(config,
                                     instance=instance,
                                     method=Method.PROX_OUTER,
                                     arm=arm,
                                     epsilon=sweep.epsilon,
                                     out_dir=None)
    report = solve(run_config, trial)
    ledger = report.ledger_snapshot
    return {
        "n_functions": n,
        "arm": str(arm),
        "trial": trial,
        "epsilon": sweep.epsilon,
        "charged": ledger.quantum_charged,
        "sampling_charged": ledger.phase_charges.get("sampling", 0),
        "suboptimality": report.suboptimality_estimate,
    }


def cmd_bench_scaling(config: ExperimentConfig) -> int:
    out = _out_dir(config)
    tasks = [(n, arm, trial) for n in config.sweep.n_values for arm in ARMS for trial in range(config.trials)]
    rows = run_trials(lambda task: _scaling_row(config, *task), tasks, config.jobs)
    write_csv(out / "bench_scaling.csv", SCALING_HEADER, rows)
    print(f"[bench-scaling] rows={len(rows)} epsilon={config.sweep.epsilon} out={out}")
    return 0


# ============================================
# hardness
# ============================================

def _hardness_row(config: ExperimentConfig, n: int, trial: int, out: Path) -> Dict[str, Any]:
    spec = config.hardness
    family = make_shuffled_instance(trial_seed(config.seed, trial, n), spec.chain_len, n, spec.smooth_param, spec.dim)
    arm = make_progress_arm(spec.arm)
    ledger = QueryLedger(cost_constants=config.cost_constants)

    trace = run_progress_experiment(arm, family, spec.budget, ledger, stream(config.seed, trial, n, "guess"))
    write_trace_csv(out / f"hardness_trace_{n}_{trial}.csv", trace)
    return {
        "n_functions": n,
        "chain_len": spec.chain_len,
        "dim": spec.dim,
        "arm": arm.name,
        "trial": trial,
        "queries": ledger.quantum_charged,
        "max_prog": trace.max_prog,
        "queries_per_progress": ledger.quantum_charged / max(trace.max_prog, 1),
        "guess_rate": guess_rate(trace, spec.chain_len),
        "guess_bound": guess_success_bound(spec.chain_len, spec.dim),
    }


def cmd_hardness(config: ExperimentConfig) -> int:
    out = _out_dir(config)
    spec = config.hardness
    for n in spec.n_values:
        needed = required_dimension(spec.chain_len, n, spec.delta)
        if spec.dim < needed:
            warnings.warn(f"Dimension {spec.dim} is below the {needed} the construction asks for at T={spec.chain_len}, "
                          f"N={n}; results are illustrative",
                          ClippedScaleWarning,
                          stacklevel=2)

    tasks = [(n, trial) for n in spec.n_values for trial in range(config.trials)]
    rows = run_trials(lambda task: _hardness_row(config, *task, out), tasks, config.jobs)
    write_csv(out / "hardness_summary.csv", HARDNESS_HEADER, rows)

    best = max((r["max_prog"] for r in rows), default=0)
    print(f"[hardness] arm={spec.arm} T={spec.chain_len} d={spec.dim} rows={len(rows)} max_prog={best} out={out}")
    return 0


# ============================================
# searchsim
# ============================================

def _search_row(config: ExperimentConfig, rounds: int, queries: int, trial: int) -> Dict[str, Any]:
    spec = config.search
    seed = trial_seed(config.seed, trial, rounds)
    instance = make_search_instance(spec.n_items, rounds, spec.key_bits, seed, warn=False)
    result = run_chained_grover(instance, queries, cap=spec.cap)
    return {
        "K": rounds,
        "d": spec.key_bits,
        "N": spec.n_items,
        "queries": result.total_queries,
        "success_prob": result.success_probability,
        "seed": seed,
    }


def cmd_searchsim(config: ExperimentConfig) -> int:
    out = _out_dir(config)
    spec = config.search
    if any(spec.key_bits < 10.0 * k * np.log(spec.n_items) for k in spec.rounds if spec.n_items > 1):
        warnings.warn(f"Key length {spec.key_bits} is below 10 K ln N for some K; results are illustrative",
                      ClippedScaleWarning,
                      stacklevel=2)

    tasks = [(k, q, trial) for k in spec.rounds for q in spec.per_round_queries for trial in range(config.trials)]
    rows = run_trials(lambda task: _search_row(config, *task), tasks, config.jobs)
    write_csv(out / "searchsim.csv", SEARCH_HEADER, rows)
    print(f"[searchsim] N={spec.n_items} d={spec.key_bits} rows={len(rows)} out={out}")
    return 0
