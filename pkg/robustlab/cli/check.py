"""`robustlab check`: the numerical property suite"""

import argparse
import logging

from robustlab.core.config import load_model, settings
from robustlab.lab.properties import LabConfig, conjunction_curves, run_all_checks, write_curves_csv
from robustlab.lab.report import format_report_details, format_report_table, write_reports_csv
from robustlab.metrics.metric_manager import build_metric, metric_manager

logger = logging.getLogger(__name__)


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("check", help="Check metric properties numerically")
    parser.add_argument("--metric", action="append", default=None,
                        help="Metric to check (repeatable; default: all registered)")
    parser.add_argument("--nu", type=float, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None, help="Points sampled per check")
    parser.add_argument("--out", default=None, help="Write the reports as CSV")
    parser.add_argument("--curves", default=None, help="Write two-operand conjunction curves as CSV")
    parser.set_defaults(func=run)


def lab_config(seed=None, samples=None) -> LabConfig:
    data = dict(settings.section("lab"))
    data.setdefault("seed", settings.default_seed)
    if seed is not None:
        data["seed"] = seed
    if samples is not None:
        data["samples"] = samples
    return load_model(LabConfig, data, "lab settings")


def run(args: argparse.Namespace) -> int:
    nu = args.nu if args.nu is not None else settings.default_nu
    names = args.metric or metric_manager.list_metrics()
    metrics = [build_metric(name, nu) for name in names]
    config = lab_config(args.seed, args.samples)
    logger.info("Checking %s with %d samples, seed %d",
                ", ".join(m.label for m in metrics), config.samples, config.seed)

    reports = [report for metric in metrics for report in run_all_checks(metric, config)]
    print(format_report_table(reports))
    for metric in metrics:
        print(f"{metric.label}: {metric.display_name}")
    print(format_report_details(reports), end="")

    if args.out:
        write_reports_csv(reports, args.out)
        logger.info("Wrote %d reports to %s", len(reports), args.out)
    if args.curves:
        write_curves_csv(conjunction_curves(metrics), args.curves)
        logger.info("Wrote conjunction curves to %s", args.curves)
    return 0
