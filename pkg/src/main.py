import os
import sys
import json
import logging
import argparse
from typing import Callable, Dict, List, Optional

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.core.exceptions import ConfigError, MaxLossError
from src.core.models import Command, ExperimentConfig
from src.cli import cmd_bench_sampler, cmd_bench_scaling, cmd_hardness, cmd_searchsim, cmd_solve
from src.utils import read_json

OUT_DIR_ENV = "MAXLOSS_OUT_DIR"
DEFAULT_OUT_DIR = "results"

COMMANDS: Dict[Command, Callable[[ExperimentConfig], int]] = {
    Command.SOLVE: cmd_solve,
    Command.BENCH_SAMPLER: cmd_bench_sampler,
    Command.BENCH_SCALING: cmd_bench_scaling,
    Command.HARDNESS: cmd_hardness,
    Command.SEARCHSIM: cmd_searchsim,
}

HELP = {
    Command.SOLVE: "Minimize the maximum loss of the configured instance",
    Command.BENCH_SAMPLER: "Sweep N and compare charged sampling cost of both arms",
    Command.BENCH_SCALING: "End-to-end prox_outer runs of both arms over an N sweep",
    Command.HARDNESS: "Progress experiments on shuffled zero-chain instances",
    Command.SEARCHSIM: "Chained Grover runs on the multi-round search simulator",
}


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="maxloss",
        description="Emulated quantum minimization of a maximum of N convex losses. "
                    "All logarithms are natural.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in Command:
        sub = subparsers.add_parser(command.value, help=HELP[command])
        sub.add_argument('--config',
                         help='JSON experiment configuration (see docs/config.schema.json)')
        sub.add_argument('--seed',
                         type=int,
                         help='Master seed (overrides the config file)')
        sub.add_argument('--out-dir',
                         help=f'Output directory (default: ${OUT_DIR_ENV} or {DEFAULT_OUT_DIR}/)')
        sub.add_argument('--trials',
                         type=int,
                         help='Number of seeded trials')
        sub.add_argument('--jobs',
                         type=int,
                         help='Worker threads (default: 1)')
        sub.add_argument('--log-level',
                         default='WARNING',
                         choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                         help='Logging level (default: WARNING)')

    return parser.parse_args(argv)


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    data = read_json(args.config) if args.config else {}
    if not isinstance(data, dict):
        raise ConfigError("<root>", "Configuration must be a JSON object")
    data = {**data, "command": args.command}

    config = ExperimentConfig.from_dict(data)
    out_dir = args.out_dir or config.out_dir or os.environ.get(OUT_DIR_ENV) or DEFAULT_OUT_DIR
    for flag in ("trials", "jobs"):
        value = getattr(args, flag)
        if value is not None and value < 1:
            raise ConfigError(flag, f"--{flag} must be positive, got {value}")
    return config.with_overrides(seed=args.seed, out_dir=out_dir, trials=args.trials, jobs=args.jobs)


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        config = load_config(args)
    except FileNotFoundError as e:
        print(f"[{args.command}] Config file not found: {e.filename}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as e:
        print(f"[{args.command}] Config file is not valid JSON: {e}", file=sys.stderr)
        return 2
    except ConfigError as e:
        print(f"[{args.command}] {e}", file=sys.stderr)
        return 2

    try:
        return COMMANDS[config.command](config)
    except ConfigError as e:
        print(f"[{args.command}] {e}", file=sys.stderr)
        return 2
    except MaxLossError as e:
        print(f"[{args.command}] Error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
