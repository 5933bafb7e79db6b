from .ledger import CostConstants, QueryLedger
from .smoothing import SmoothingContext
from .sampling import SamplingArm, TruncatedDistribution, SampleBatch
from .broo import BrooConvention, BrooQuery, EpochState
from .report import SolveReport
from .hardness import HardInstance, ProgressRecord, ProgressTrace
from .search import (
    # Enums
    Register,
    StepKind,

    # Search simulator
    SearchInstance,
    SearchState,
    AdversaryStep,
    ChainedGroverResult,
)
from .config import (
    Command,
    Method,
    FamilyKind,
    InstanceSpec,
    SweepSpec,
    HardnessSpec,
    SearchSpec,
    ExperimentConfig,
)

__all__ = [
    # Accounting
    "CostConstants",
    "QueryLedger",

    # Smoothing & sampling
    "SmoothingContext",
    "SamplingArm",
    "TruncatedDistribution",
    "SampleBatch",

    # Ball oracle
    "BrooConvention",
    "BrooQuery",
    "EpochState",

    # Solver
    "SolveReport",

    # Hardness
    "HardInstance",
    "ProgressRecord",
    "ProgressTrace",

    # Search simulator
    "Register",
    "StepKind",
    "SearchInstance",
    "SearchState",
    "AdversaryStep",
    "ChainedGroverResult",

    # Configuration
    "Command",
    "Method",
    "FamilyKind",
    "InstanceSpec",
    "SweepSpec",
    "HardnessSpec",
    "SearchSpec",
    "ExperimentConfig",
]
