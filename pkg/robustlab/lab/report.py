"""Property reports and their text / CSV renderings"""

import csv
from pathlib import Path
from typing import Dict, List, Sequence

from pydantic import BaseModel, Field, model_validator

# Column order of the summary table
PROPERTY_ORDER = ["P1", "P2", "P3", "P4", "P5", "P6", "Kink", "EqGrad", "Edge", "Limit", "Lift"]

PROPERTY_TITLES: Dict[str, str] = {
    "P1": "soundness",
    "P2": "idempotent and commutative",
    "P3": "weakly smooth",
    "P4": "shadow-lifting",
    "P5": "min/max bounded",
    "P6": "scale invariant",
    "Kink": "not smooth at the origin",
    "EqGrad": "equal-point gradient 1/M",
    "Edge": "unit derivative at the sign boundary",
    "Limit": "limit with dominant operands",
    "Lift": "non-monotone lift",
}

PASS_MARK = "✓"
FAIL_MARK = "✗"


class PropertyReport(BaseModel):
    """Outcome of one numerical property check for one metric"""

    property_id: str
    metric: str
    samples: int = Field(ge=0)
    max_violation: float = Field(ge=0)
    tolerance: float = Field(ge=0)
    passed: bool = False
    witness: List[float] = Field(default_factory=list, description="Worst-case point")
    detail: str = ""

    @model_validator(mode="after")
    def derive_passed(self):
        self.passed = self.max_violation <= self.tolerance
        return self

    @property
    def mark(self) -> str:
        return PASS_MARK if self.passed else FAIL_MARK


def _format_witness(witness: Sequence[float]) -> str:
    return " ".join(f"{w:.9g}" for w in witness)


def format_report_table(reports: Sequence[PropertyReport]) -> str:
    """Plain-text table: one row per metric, one column per property"""
    metrics: List[str] = []
    cells: Dict[str, Dict[str, str]] = {}
    for report in reports:
        if report.metric not in cells:
            metrics.append(report.metric)
            cells[report.metric] = {}
        cells[report.metric][report.property_id] = report.mark

    columns = [p for p in PROPERTY_ORDER if any(p in row for row in cells.values())]
    columns += sorted({p for row in cells.values() for p in row} - set(columns))

    name_width = max([len("metric")] + [len(m) for m in metrics])
    widths = [max(len(c), 1) for c in columns]
    lines = [
        "  ".join(["metric".ljust(name_width)] + [c.center(w) for c, w in zip(columns, widths)]),
        "  ".join(["-" * name_width] + ["-" * w for w in widths]),
    ]
    for metric in metrics:
        row = [cells[metric].get(c, "").center(w) for c, w in zip(columns, widths)]
        lines.append("  ".join([metric.ljust(name_width)] + row).rstrip())
    return "\n".join(lines) + "\n"


def format_report_details(reports: Sequence[PropertyReport]) -> str:
    lines = []
    for r in reports:
        title = PROPERTY_TITLES.get(r.property_id, r.property_id)
        lines.append(
            f"{r.metric:<14} {r.property_id:<6} {r.mark} {title}: max violation {r.max_violation:.3g} "
            f"(tol {r.tolerance:g}, {r.samples} samples) witness [{_format_witness(r.witness)}]"
            + (f" {r.detail}" if r.detail else "")
        )
    return "\n".join(lines) + "\n"


def write_reports_csv(reports: Sequence[PropertyReport], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["property", "metric", "samples", "max_violation", "tolerance",
                         "passed", "witness", "detail"])
        for r in reports:
            writer.writerow([r.property_id, r.metric, r.samples, f"{r.max_violation:.9g}",
                             f"{r.tolerance:g}", int(r.passed), _format_witness(r.witness),
                             r.detail])
