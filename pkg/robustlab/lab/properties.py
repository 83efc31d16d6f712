"""Numerical checks of the conjunction-operator properties

Each check samples points with an explicit seeded generator, measures the
worst violation of its property and returns a PropertyReport carrying the
witness that produced it. Checks only use BaseMetric.and_n, so any metric can
be checked.
"""

import csv
import logging
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from robustlab.formula.printer import format_formula
from robustlab.lab.gradients import numeric_partial, one_sided_partials, relative_step
from robustlab.lab.random_formulas import random_formula, random_trace
from robustlab.lab.report import PropertyReport
from robustlab.metrics.base import BaseMetric
from robustlab.semantics.boolean import satisfaction_signal
from robustlab.semantics.robustness import robustness_signal
from robustlab.services.metrics import record_check

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000

# one-sided quotients closer than this count as equal
SMOOTH_TOLERANCE = 1e-3
# a one-sided derivative must exceed this to count as positive
LIFT_THRESHOLD = 1e-6
EQUAL_POINT_TOLERANCE = 5e-4
SOUNDNESS_DEADBAND = 1e-6


class LabConfig(BaseModel):
    """Sample counts and seed for the property suite (profile section `lab`)"""

    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    soundness_formulas: int = Field(default=100, ge=1)
    seed: int = DEFAULT_SEED


def _rng(rng: Optional[np.random.Generator]) -> np.random.Generator:
    return rng if rng is not None else np.random.default_rng(DEFAULT_SEED)


class _Worst:
    """Tracks the largest violation seen and the point that produced it"""

    def __init__(self):
        self.violation = 0.0
        self.witness: List[float] = []
        self.detail = ""
        self.samples = 0

    def update(self, violation: float, witness, detail: str = "", count: int = 1):
        self.samples += count
        if violation > self.violation or not self.witness:
            self.violation = max(float(violation), self.violation)
            self.witness = [float(w) for w in witness]
            self.detail = detail

    def report(self, property_id: str, metric: BaseMetric, tolerance: float) -> PropertyReport:
        report = PropertyReport(
            property_id=property_id,
            metric=metric.label,
            samples=self.samples,
            max_violation=self.violation,
            tolerance=tolerance,
            witness=self.witness,
            detail=self.detail,
        )
        record_check(property_id, report.passed)
        logger.info("%s %s on %s: max violation %.3g (%d samples)", property_id,
                    "passed" if report.passed else "failed", metric.label,
                    report.max_violation, report.samples)
        return report


def _signed_magnitudes(rng: np.random.Generator, size=None, low: float = 0.1, high: float = 5.0):
    return rng.choice([-1.0, 1.0], size=size) * rng.uniform(low, high, size=size)


def check_idempotence_commutativity(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                                    rng: Optional[np.random.Generator] = None) -> PropertyReport:
    """and(rho, ..., rho) = rho and operand order does not matter"""
    rng = _rng(rng)
    worst = _Worst()
    for _ in range(n_samples):
        m = int(rng.integers(1, 7))
        rho = float(rng.uniform(-5, 5))
        worst.update(abs(metric.and_n(np.full(m, rho)) - rho), [rho] * m, "idempotence")

        point = rng.uniform(-5, 5, size=m)
        shuffled = rng.permutation(point)
        worst.update(abs(metric.and_n(point) - metric.and_n(shuffled)), point, "commutativity")
    return worst.report("P2", metric, 1e-9)


def check_minmax_bounds(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                        rng: Optional[np.random.Generator] = None) -> PropertyReport:
    """min(rho) <= and(rho) <= max(rho)"""
    rng = _rng(rng)
    worst = _Worst()
    for _ in range(n_samples):
        point = rng.uniform(-5, 5, size=int(rng.integers(1, 7)))
        value = metric.and_n(point)
        worst.update(max(point.min() - value, value - point.max(), 0.0), point)
    return worst.report("P5", metric, 1e-12)


def check_scale_invariance(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                           rng: Optional[np.random.Generator] = None,
                           alphas: Sequence[float] = (1e-3, 0.1, 1.0, 10.0, 1e3)) -> PropertyReport:
    """and(a*rho) = a*and(rho) for a > 0, as relative error; the witness ends with a"""
    rng = _rng(rng)
    worst = _Worst()
    for _ in range(n_samples):
        point = rng.uniform(-5, 5, size=int(rng.integers(1, 7)))
        base = metric.and_n(point)
        for alpha in alphas:
            expected = alpha * base
            actual = metric.and_n(alpha * point)
            if expected == actual:
                error = 0.0
            else:
                error = abs(actual - expected) / max(abs(expected), np.finfo(float).tiny)
            worst.update(error, list(point) + [alpha], "witness = point then alpha")
    return worst.report("P6", metric, 1e-9)


def check_shadow_lifting(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                         rng: Optional[np.random.Generator] = None) -> PropertyReport:
    """Positive partial derivatives at all-equal points

    Both one-sided quotients must exceed a small positive threshold; where they
    agree the central estimate must also equal 1/M.
    """
    rng = _rng(rng)
    worst = _Worst()
    for _ in range(n_samples):
        m = int(rng.integers(2, 7))
        rho = float(_signed_magnitudes(rng))
        point = np.full(m, rho)
        h = relative_step(rho)
        for i in range(m):
            backward, forward = one_sided_partials(metric, point, i, h)
            violation = max(0.0, LIFT_THRESHOLD - min(backward, forward))
            if abs(forward - backward) <= SMOOTH_TOLERANCE:
                central = 0.5 * (forward + backward)
                violation += max(0.0, abs(central - 1.0 / m) - EQUAL_POINT_TOLERANCE)
            worst.update(violation, point,
                         f"coordinate {i}: backward {backward:.6g}, forward {forward:.6g}")
    return worst.report("P4", metric, 0.0)


def _weak_smoothness_points(rng: np.random.Generator, n_samples: int):
    """Unique-minimum points, sign-switch points and all-equal points, in turn"""
    for k in range(n_samples):
        m = int(rng.integers(2, 7))
        family = k % 3
        if family == 0:
            rmin = float(_signed_magnitudes(rng, low=0.01, high=4.9))
            others = rmin + rng.uniform(0.1, 5.0, size=m - 1)
            point = rng.permutation(np.concatenate([[rmin], others]))
            yield "unique minimum", point
        elif family == 1:
            point = np.concatenate([[0.0], rng.uniform(0.2, 5.0, size=m - 1)])
            yield "sign switch", rng.permutation(point)
        else:
            yield "all equal", np.full(m, float(_signed_magnitudes(rng)))


def check_weak_smoothness(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                          rng: Optional[np.random.Generator] = None,
                          steps: Sequence[float] = (1e-4, 1e-5)) -> PropertyReport:
    """Left and right difference quotients agree in every coordinate

    Probed at unique-minimum points, at sign switches {0, rho > 0.2} and at
    all-equal nonzero points. A kink keeps the quotients apart for every step, so the violation at a point
    is the gap at the best step of the sweep.
    """
    rng = _rng(rng)
    worst = _Worst()
    for family, point in _weak_smoothness_points(rng, n_samples):
        gaps = []
        for h in steps:
            gap = 0.0
            for i in range(point.shape[0]):
                backward, forward = one_sided_partials(metric, point, i, h)
                gap = max(gap, abs(forward - backward))
            gaps.append(gap)
        worst.update(min(gaps), point, family)
    return worst.report("P3", metric, SMOOTH_TOLERANCE)


def check_boundary_derivative(metric: BaseMetric, n_samples: int = DEFAULT_SAMPLES,
                              rng: Optional[np.random.Generator] = None) -> PropertyReport:
    """Partial derivative 1 w.r.t. an operand at zero when the others exceed 0.2"""
    rng = _rng(rng)
    worst = _Worst()
    for _ in range(n_samples):
        m = int(rng.integers(2, 7))
        i = int(rng.integers(m))
        point = rng.uniform(0.2, 5.0, size=m)
        point[i] = 0.0
        estimate = numeric_partial(metric, point, i, 1e-5)
        worst.update(abs(estimate - 1.0), point, f"coordinate {i}: estimate {estimate:.6g}")
    return worst.report("Edge", metric, 1e-3)


def _lift_profile(metric: BaseMetric, points: int = 2001) -> Tuple[np.ndarray, np.ndarray]:
    grid = np.linspace(-1.0, 100.0, points)
    values = metric.and_n(np.column_stack([np.full(points, -1.0), grid]))
    return grid, values


def _lift_violation(metric: BaseMetric) -> Tuple[float, List[float], str]:
    grid, values = _lift_profile(metric)
    peak = int(np.argmax(values))
    rise = values[peak] + 1.0
    drift = abs(values[-1] + 1.0)
    violation = max(0.0, SMOOTH_TOLERANCE - rise) + max(0.0, drift - SMOOTH_TOLERANCE)
    detail = f"peak {values[peak]:.6g} at rho={grid[peak]:.4g}, value {values[-1]:.6g} at rho=100"
    return violation, [-1.0, float(grid[peak])], detail


def check_limit_behavior(metric: BaseMetric) -> PropertyReport:
    """and(rho_1, 10^k, ..., 10^k) approaches rho_1 monotonically as k grows

    The detail also describes the lift of and(-1, rho) over rho in [-1, 100].
    """
    worst = _Worst()
    for rho1 in (-1.0, 0.5):
        for m in (2, 3):
            distances = []
            for k in range(2, 7):
                point = np.concatenate([[rho1], np.full(m - 1, 10.0 ** k)])
                distances.append(abs(metric.and_n(point) - rho1))
            increases = sum(max(0.0, b - a) for a, b in zip(distances, distances[1:]))
            violation = increases + max(0.0, distances[-1] - SMOOTH_TOLERANCE)
            worst.update(violation, [rho1] + [1e6] * (m - 1))
    _, _, lift = _lift_violation(metric)
    worst.detail = lift
    return worst.report("Limit", metric, 0.0)


def check_non_monotone_lift(metric: BaseMetric) -> PropertyReport:
    """and(-1, rho) rises above -1 and returns to within 1e-3 of -1 at rho = 100"""
    worst = _Worst()
    violation, witness, detail = _lift_violation(metric)
    worst.update(violation, witness, detail)
    return worst.report("Lift", metric, 0.0)


def check_equal_point_gradient(metric: BaseMetric) -> PropertyReport:
    """Central partials at all-equal points equal 1/M"""
    worst = _Worst()
    for m in (2, 3, 5):
        for rho in (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0):
            point = np.full(m, rho)
            for i in range(m):
                estimate = numeric_partial(metric, point, i, relative_step(rho))
                worst.update(abs(estimate - 1.0 / m), point,
                             f"coordinate {i}: estimate {estimate:.6g}")
    return worst.report("EqGrad", metric, EQUAL_POINT_TOLERANCE)


def check_origin_nonsmoothness(metric: BaseMetric,
                               steps: Sequence[float] = (1e-4, 1e-5, 1e-6)) -> PropertyReport:
    """The operator is not differentiable at the origin

    A sound idempotent conjunction cannot be smooth there, so the check passes
    when the one-sided quotients stay apart.
    """
    worst = _Worst()
    for m in (2, 3, 4):
        point = np.zeros(m)
        for h in steps:
            backward, forward = one_sided_partials(metric, point, 0, h)
            worst.update(max(0.0, SMOOTH_TOLERANCE - abs(forward - backward)), point,
                         f"backward {backward:.6g}, forward {forward:.6g}")
    return worst.report("Kink", metric, 0.0)


def check_soundness(metric: BaseMetric, n_formulas: int = 100,
                    rng: Optional[np.random.Generator] = None) -> PropertyReport:
    """Sign of robustness matches Boolean satisfaction wherever |rho| > 1e-6

    Witness is (formula number, time); the detail holds the formula.
    """
    rng = _rng(rng)
    worst = _Worst()
    for n in range(n_formulas):
        formula = random_formula(rng, depth=4)
        trace = random_trace(rng, length=int(rng.integers(60, 201)))
        rho = robustness_signal(metric, formula, trace)
        sat = satisfaction_signal(formula, trace)
        decided = np.abs(rho) > SOUNDNESS_DEADBAND
        wrong = decided & ((rho > 0) != sat)
        count = int(decided.sum())
        if wrong.any():
            k = int(np.argmax(np.where(wrong, np.abs(rho), -1.0)))
            worst.update(float(abs(rho[k])), [n, trace.t0 + k * trace.dt], format_formula(formula), count)
        else:
            worst.update(0.0, [n, trace.t0], "", count)
    return worst.report("P1", metric, 0.0)


def run_all_checks(metric: BaseMetric, config: Optional[LabConfig] = None) -> List[PropertyReport]:
    """Every property check with a fresh generator per check, in table order"""
    config = config or LabConfig()
    seeded: List[Callable[[np.random.Generator], PropertyReport]] = [
        lambda r: check_soundness(metric, config.soundness_formulas, r),
        lambda r: check_idempotence_commutativity(metric, config.samples, r),
        lambda r: check_weak_smoothness(metric, config.samples, r),
        lambda r: check_shadow_lifting(metric, config.samples, r),
        lambda r: check_minmax_bounds(metric, config.samples, r),
        lambda r: check_scale_invariance(metric, config.samples, r),
    ]
    reports = [check(np.random.default_rng(config.seed)) for check in seeded]
    reports += [
        check_origin_nonsmoothness(metric),
        check_equal_point_gradient(metric),
        check_boundary_derivative(metric, config.samples, np.random.default_rng(config.seed)),
        check_limit_behavior(metric),
        check_non_monotone_lift(metric),
    ]
    return reports


def conjunction_curves(metrics: Sequence[BaseMetric], points: int = 121) -> List[dict]:
    """Two-operand sweeps and(-1, rho2), rho2 in [-1.1, 0.1], and and(1, rho2), rho2 in [-0.2, 1.2]"""
    rows = []
    for rho1, low, high in ((-1.0, -1.1, 0.1), (1.0, -0.2, 1.2)):
        grid = np.linspace(low, high, points)
        for metric in metrics:
            values = metric.and_n(np.column_stack([np.full(points, rho1), grid]))
            rows.extend(
                {"metric": metric.label, "rho1": rho1, "rho2": float(r2), "value": float(v)}
                for r2, v in zip(grid, values)
            )
    return rows


def write_curves_csv(rows: Sequence[dict], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["metric", "rho1", "rho2", "value"])
        for row in rows:
            writer.writerow([row["metric"], f"{row['rho1']:g}", f"{row['rho2']:.9g}",
                             f"{row['value']:.9g}"])
