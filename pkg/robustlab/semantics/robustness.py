"""Quantitative semantics built from a metric's conjunction

Every node is evaluated as a signal over sample indices, bottom-up. Temporal
windows are taken on the trace's sampling grid, one conjunct per in-window
sample, and each n-ary conjunction is a single and_n call.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from robustlab.core.exceptions import InsufficientTraceError
from robustlab.formula.ast import (
    Always, And, Eventually, Formula, Not, Or, Path, Predicate, TrueF, Until, subformulas,
)
from robustlab.formula.printer import format_formula
from robustlab.metrics.base import TRUE_ROBUSTNESS, BaseMetric
from robustlab.services.metrics import track_evaluation
from robustlab.signals.trace import (
    Trace, predicate_signal, window_indices, window_offsets, window_rows,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Annotation:
    path: Path
    node: Formula
    value: float

    @property
    def text(self) -> str:
        return format_formula(self.node)


@dataclass(frozen=True)
class RobustnessResult:
    """Robustness at the evaluation time plus the value of every subformula there"""

    value: float
    annotations: Tuple[Annotation, ...]

    @property
    def root(self) -> Annotation:
        return self.annotations[0]

    def at(self, path: Path) -> float:
        for annotation in self.annotations:
            if annotation.path == path:
                return annotation.value
        raise KeyError(path)


def _stack(signals: List[np.ndarray]) -> np.ndarray:
    length = min(s.shape[0] for s in signals)
    return np.stack([s[:length] for s in signals], axis=1)


def _until(metric: BaseMetric, lhs: np.ndarray, rhs: np.ndarray, lo: int, hi: int) -> np.ndarray:
    length = min(lhs.shape[0], rhs.shape[0]) - hi
    if length <= 0:
        raise InsufficientTraceError(f"Until window reaching offset {hi} does not fit the trace")
    out = np.empty(length)
    for k in range(length):
        # lhs must hold on every sample of [t, t_k1]
        held = np.array([metric.and_n(lhs[k:k + j + 1]) for j in range(lo, hi + 1)])
        pairs = np.column_stack([rhs[k + lo:k + hi + 1], held])
        out[k] = metric.or_n(metric.and_n(pairs))
    return out


def _signal(metric: BaseMetric, f: Formula, trace: Trace, path: Path,
            out: Optional[Dict[Path, np.ndarray]]) -> np.ndarray:
    if isinstance(f, TrueF):
        sig = np.full(trace.length, TRUE_ROBUSTNESS)
    elif isinstance(f, Predicate):
        sig = predicate_signal(trace, f.expr)
    elif isinstance(f, Not):
        sig = -_signal(metric, f.child, trace, path + (0,), out)
    elif isinstance(f, (And, Or)):
        parts = [_signal(metric, c, trace, path + (i,), out) for i, c in enumerate(f.children)]
        matrix = _stack(parts)
        sig = metric.and_n(matrix) if isinstance(f, And) else metric.or_n(matrix)
    elif isinstance(f, (Always, Eventually)):
        child = _signal(metric, f.child, trace, path + (0,), out)
        lo, hi = window_offsets(trace.dt, f.a, f.b)
        rows = window_rows(child, lo, hi)
        sig = metric.and_n(rows) if isinstance(f, Always) else metric.or_n(rows)
    elif isinstance(f, Until):
        lhs = _signal(metric, f.lhs, trace, path + (0,), out)
        rhs = _signal(metric, f.rhs, trace, path + (1,), out)
        lo, hi = window_offsets(trace.dt, f.a, f.b)
        sig = _until(metric, lhs, rhs, lo, hi)
    else:
        raise TypeError(f"Not a formula node: {f!r}")

    sig = np.asarray(sig, dtype=float)
    if out is not None:
        out[path] = sig
    return sig


def robustness_signal(metric: BaseMetric, f: Formula, trace: Trace) -> np.ndarray:
    """Robustness at every sample index whose horizon the trace covers"""
    with track_evaluation(metric.name):
        return _signal(metric, f, trace, (), None)


def evaluation_index(trace: Trace, t: float) -> int:
    """Sample index of time t; t must lie on the sampling grid"""
    k, _ = window_indices(trace, t, 0.0, 0.0)
    return k


def robustness(metric: BaseMetric, f: Formula, trace: Trace, t: float = 0.0) -> RobustnessResult:
    """Robustness of f on trace at time t, annotated per subformula

    Raises InsufficientTraceError when the trace does not cover [t, t + horizon(f)]
    and EmptyWindowError for windows that fall between samples.
    """
    k = evaluation_index(trace, t)
    signals: Dict[Path, np.ndarray] = {}
    with track_evaluation(metric.name):
        root = _signal(metric, f, trace, (), signals)
    if root.shape[0] <= k:
        raise InsufficientTraceError(
            f"Trace ending at {trace.t_end}s does not cover the formula horizon from t={t}"
        )

    annotations = tuple(
        Annotation(path=path, node=node, value=float(signals[path][k]))
        for path, node in subformulas(f)
    )
    value = float(root[k])
    logger.debug("robustness %s = %.6g at t=%g", metric.label, value, t)
    return RobustnessResult(value=value, annotations=annotations)
