"""`robustlab learn`: one PI2 run from a learn file"""

import argparse

from robustlab.learning.session import load_learn_config, run_learn_config


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("learn", help="Run guided PI2 from a learn file")
    parser.add_argument("config", help="Learn YAML (scenario, metric, guidance, pi2 block)")
    parser.add_argument("--out", default=None, help="History CSV (overrides the file's `out`)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    history = run_learn_config(load_learn_config(args.config), args.out)
    final = history.final
    if final is None:
        print("no iterations run")
    else:
        print(f"iteration {final.iteration}: rho = {final.rho:.6g}, cost = {final.cost:.6g}, "
              f"success = {str(final.success).lower()}")
    return 0
