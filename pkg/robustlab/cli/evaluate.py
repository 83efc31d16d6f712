"""`robustlab eval`: robustness of a formula on a trace"""

import argparse
import logging
from pathlib import Path

from robustlab.core.config import settings
from robustlab.formula.grammar import parse_formula
from robustlab.metrics.metric_manager import build_metric
from robustlab.semantics.robustness import RobustnessResult, robustness
from robustlab.signals.trace import load_trace

logger = logging.getLogger(__name__)


def read_formula(source: str) -> str:
    """Formula text from a file when `source` names one, otherwise `source` itself"""
    path = Path(source)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    return source


def format_breakdown(result: RobustnessResult) -> str:
    lines = [f"rho = {result.value:.6g}"]
    for annotation in result.annotations:
        indent = "  " * (len(annotation.path) + 1)
        lines.append(f"{indent}{annotation.value:.6g}  {annotation.text}")
    return "\n".join(lines)


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="Evaluate robustness of a formula on a trace")
    parser.add_argument("formula", help="Formula text, or a file containing it")
    parser.add_argument("trace", help="Trace CSV (time column plus one column per channel)")
    parser.add_argument("--metric", default="traditional", help="traditional|trad|ag|new")
    parser.add_argument("--nu", type=float, default=None, help="Sharpness of the new metric")
    parser.add_argument("--time", type=float, default=0.0, help="Evaluation time (s)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    formula = parse_formula(read_formula(args.formula))
    trace = load_trace(args.trace)
    metric = build_metric(args.metric, args.nu if args.nu is not None else settings.default_nu)
    result = robustness(metric, formula, trace, args.time)
    logger.debug("Evaluated %s at t=%g with %s", args.formula, args.time, metric.label)
    print(format_breakdown(result))
    return 0 if result.value >= 0 else 1
