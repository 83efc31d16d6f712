"""`robustlab casestudy`: metric x guidance sweep with CSV summaries"""

import argparse
import logging

from robustlab.experiments.casestudy import plan_from_profile, run_casestudy
from robustlab.experiments.export import export_curves, write_summary
from robustlab.experiments.optimum import analytic_optimum

logger = logging.getLogger(__name__)


def _csv_list(value: str):
    return [item.strip() for item in value.split(",") if item.strip()]


def seed_list(value: str):
    """`3` means seeds 0..2; `1,4,9` lists seeds explicitly"""
    items = _csv_list(value)
    if len(items) == 1 and "," not in value:
        return list(range(int(items[0])))
    return [int(item) for item in items]


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("casestudy", help="Run the two-goal case study")
    parser.add_argument("--metrics", type=_csv_list, default=None, help="Comma-separated metric names")
    parser.add_argument("--guidance", type=_csv_list, default=None, help="Comma-separated: none,weak,strong")
    parser.add_argument("--seeds", type=seed_list, default=None, help="Seed count, or comma-separated seeds")
    parser.add_argument("--out", default="out/casestudy", help="Output directory")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes")
    parser.add_argument("--iterations", type=int, default=None, help="Override PI2 iterations K")
    parser.add_argument("--nu", type=float, default=None)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    pi2 = {"K": args.iterations} if args.iterations is not None else None
    plan = plan_from_profile(metrics=args.metrics, guidance=args.guidance, seeds=args.seeds,
                             max_workers=args.workers, nu=args.nu, pi2=pi2)
    summary = run_casestudy(plan)
    written = write_summary(summary, args.out) + export_curves(summary, args.out)

    optimum = analytic_optimum()
    print(f"optimum: {optimum.describe()}")
    print(f"{'metric':<12} {'guidance':<9} {'success':>8} {'iters p50':>10} {'cost p50':>9}")
    for c in summary.configurations:
        print(f"{c.metric:<12} {c.guidance:<9} {c.success_rate:>8.0%} "
              f"{c.iterations[1]:>10.4g} {c.final_cost[1]:>9.4g}")
    logger.info("Wrote %d files to %s", len(written), args.out)
    return 0
