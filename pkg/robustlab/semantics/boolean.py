"""Boolean satisfaction on the same sampling grid as the robustness engine"""

import numpy as np

from robustlab.core.exceptions import InsufficientTraceError
from robustlab.formula.ast import Always, And, Eventually, Formula, Not, Or, Predicate, TrueF, Until
from robustlab.semantics.robustness import evaluation_index
from robustlab.signals.trace import Trace, predicate_signal, window_offsets, window_rows


def _until(lhs: np.ndarray, rhs: np.ndarray, lo: int, hi: int) -> np.ndarray:
    length = min(lhs.shape[0], rhs.shape[0]) - hi
    if length <= 0:
        raise InsufficientTraceError(f"Until window reaching offset {hi} does not fit the trace")
    out = np.empty(length, dtype=bool)
    for k in range(length):
        held = np.logical_and.accumulate(lhs[k:k + hi + 1])[lo:]
        out[k] = bool(np.any(rhs[k + lo:k + hi + 1] & held))
    return out


def satisfaction_signal(f: Formula, trace: Trace) -> np.ndarray:
    """Satisfaction at every sample index whose horizon the trace covers"""
    if isinstance(f, TrueF):
        return np.ones(trace.length, dtype=bool)
    if isinstance(f, Predicate):
        return predicate_signal(trace, f.expr) >= 0
    if isinstance(f, Not):
        return ~satisfaction_signal(f.child, trace)
    if isinstance(f, (And, Or)):
        parts = [satisfaction_signal(c, trace) for c in f.children]
        length = min(p.shape[0] for p in parts)
        matrix = np.stack([p[:length] for p in parts], axis=1)
        return matrix.all(axis=1) if isinstance(f, And) else matrix.any(axis=1)
    if isinstance(f, (Always, Eventually)):
        lo, hi = window_offsets(trace.dt, f.a, f.b)
        rows = window_rows(satisfaction_signal(f.child, trace), lo, hi)
        return rows.all(axis=1) if isinstance(f, Always) else rows.any(axis=1)
    if isinstance(f, Until):
        lo, hi = window_offsets(trace.dt, f.a, f.b)
        return _until(satisfaction_signal(f.lhs, trace), satisfaction_signal(f.rhs, trace), lo, hi)
    raise TypeError(f"Not a formula node: {f!r}")


def eval_boolean(f: Formula, trace: Trace, t: float = 0.0) -> bool:
    """Whether trace satisfies f at time t"""
    k = evaluation_index(trace, t)
    sig = satisfaction_signal(f, trace)
    if sig.shape[0] <= k:
        raise InsufficientTraceError(
            f"Trace ending at {trace.t_end}s does not cover the formula horizon from t={t}"
        )
    return bool(sig[k])
