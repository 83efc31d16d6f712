"""CSV exports of a case-study summary"""

import csv
import logging
import math
from pathlib import Path
from typing import List

from robustlab.control.scenario import GUIDANCE_LEVELS
from robustlab.experiments.casestudy import ExperimentSummary

logger = logging.getLogger(__name__)

CURVE_HEADER = ["iteration", "rho_median", "rho_p10", "rho_p90",
                "cost_median", "cost_p10", "cost_p90"]
SUMMARY_HEADER = ["metric", "guidance", "runs", "success_rate",
                  "iterations_p10", "iterations_p50", "iterations_p90",
                  "cost_p10", "cost_p50", "cost_p90"]


def _num(value: float) -> str:
    return "nan" if math.isnan(value) else f"{value:.9g}"


def _writer(f):
    return csv.writer(f, lineterminator="\n")


def export_curves(summary: ExperimentSummary, out_dir: str | Path) -> List[Path]:
    """curves_{metric}_{guidance}.csv per configuration, one row per iteration"""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for c in summary.configurations:
        if c.successes == 0:
            logger.warning("%s / %s has no successful run; cost bands are nan", c.metric, c.guidance)
        path = out_dir / f"curves_{c.metric}_{c.guidance}.csv"
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = _writer(f)
            writer.writerow(CURVE_HEADER)
            for i, (rho, cost) in enumerate(zip(c.rho_bands, c.cost_bands), start=1):
                writer.writerow([i] + [_num(v) for v in rho] + [_num(v) for v in cost])
        paths.append(path)
    return paths


def write_summary(summary: ExperimentSummary, out_dir: str | Path) -> List[Path]:
    """summary.csv (one row per configuration) and success_table.csv (metric x guidance)"""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    summary_path = out_dir / "summary.csv"
    with open(summary_path, "w", encoding="utf-8", newline="") as f:
        writer = _writer(f)
        writer.writerow(SUMMARY_HEADER)
        for c in summary.configurations:
            writer.writerow([c.metric, c.guidance, c.runs, _num(c.success_rate)]
                            + [_num(v) for v in c.iterations] + [_num(v) for v in c.final_cost])

    metrics = list(dict.fromkeys(c.metric for c in summary.configurations))
    levels = [g for g in GUIDANCE_LEVELS if any(c.guidance == g for c in summary.configurations)]
    table_path = out_dir / "success_table.csv"
    with open(table_path, "w", encoding="utf-8", newline="") as f:
        writer = _writer(f)
        writer.writerow(["metric"] + levels)
        for m in metrics:
            row = [m]
            for g in levels:
                try:
                    row.append(_num(summary.get(m, g).success_rate))
                except KeyError:
                    row.append("")
            writer.writerow(row)
    return [summary_path, table_path]
