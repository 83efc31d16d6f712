"""Uniformly sampled multi-channel traces"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Sequence, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from robustlab.core.exceptions import (
    EmptyWindowError, InsufficientTraceError, TraceFormatError, UnknownChannelError,
)
from robustlab.formula.ast import Add, Channel, Const, Expr, Norm, Scale, Sub

TIME_COLUMN = "time"
SAMPLING_TOLERANCE = 1e-9
WINDOW_GUARD = 1e-6


@dataclass(frozen=True)
class Trace:
    """Samples x(t0 + k*dt), k = 0..N-1, one column per channel"""

    t0: float
    dt: float
    channels: Tuple[str, ...]
    samples: np.ndarray
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float, copy=True)
        if samples.ndim == 1 and len(self.channels) == 1:
            samples = samples.reshape(-1, 1)
        if samples.ndim != 2 or samples.shape[0] < 1:
            raise TraceFormatError("A trace needs at least one row of samples")
        if samples.shape[1] != len(self.channels):
            raise TraceFormatError(
                f"{samples.shape[1]} sample columns for {len(self.channels)} channels"
            )
        if not self.dt > 0:
            raise TraceFormatError(f"Sampling step must be positive, got {self.dt}")
        if len(set(self.channels)) != len(self.channels):
            raise TraceFormatError("Channel names must be unique")
        samples.setflags(write=False)
        object.__setattr__(self, "channels", tuple(self.channels))
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.channels)})

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return (self.t0 == other.t0 and self.dt == other.dt
                and self.channels == other.channels
                and np.array_equal(self.samples, other.samples))

    __hash__ = None

    @property
    def length(self) -> int:
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        return (self.length - 1) * self.dt

    @property
    def t_end(self) -> float:
        return self.t0 + self.duration

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.length)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.samples[:, self._index[name]]
        except KeyError:
            raise UnknownChannelError(
                f"Unknown channel '{name}'; trace has {', '.join(self.channels)}"
            ) from None

    def has_channels(self, names: Sequence[str]) -> bool:
        return all(name in self._index for name in names)


def _parse_cell(cell: str, row: int, col: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise TraceFormatError(f"Non-numeric cell {cell!r} at row {row}, column {col}") from None


def load_trace(path: str | Path, default_dt: float = 0.02) -> Trace:
    """Read a CSV trace: header 'time,<channels...>', one row per sample

    A single-row file has no sampling step of its own and gets default_dt.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8", newline="") as f:
        rows = [row for row in csv.reader(f) if row]

    if not rows:
        raise TraceFormatError(f"{path}: empty file")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2 or header[0] != TIME_COLUMN:
        raise TraceFormatError(f"{path}: header must start with '{TIME_COLUMN}' and name at least one channel")
    if any(not name for name in header[1:]):
        raise TraceFormatError(f"{path}: empty channel name in header")
    if len(set(header[1:])) != len(header) - 1:
        raise TraceFormatError(f"{path}: duplicate channel names in header")

    body = rows[1:]
    if not body:
        raise TraceFormatError(f"{path}: no samples")
    values = []
    for r, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise TraceFormatError(f"{path}: row {r} has {len(row)} cells, expected {len(header)}")
        values.append([_parse_cell(cell.strip(), r, c) for c, cell in enumerate(row, start=1)])
    data = np.array(values, dtype=float)

    times = data[:, 0]
    if not np.all(np.isfinite(data)):
        raise TraceFormatError(f"{path}: non-finite values")
    if len(times) == 1:
        dt = default_dt
    else:
        steps = np.diff(times)
        if np.any(steps <= 0):
            raise TraceFormatError(f"{path}: time column must be strictly increasing")
        dt = (times[-1] - times[0]) / (len(times) - 1)
        if np.max(np.abs(steps - dt)) > SAMPLING_TOLERANCE:
            raise TraceFormatError(f"{path}: samples are not uniformly spaced")

    return Trace(t0=float(times[0]), dt=float(dt), channels=tuple(header[1:]), samples=data[:, 1:])


def save_trace(trace: Trace, path: str | Path) -> None:
    """Write the trace as CSV with 9 significant digits and LF line endings"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([TIME_COLUMN, *trace.channels])
        for t, row in zip(trace.times, trace.samples):
            writer.writerow([f"{t:.9g}", *(f"{v:.9g}" for v in row)])


def predicate_signal(trace: Trace, expr: Expr) -> np.ndarray:
    """Evaluate a predicate expression at every sample"""
    if isinstance(expr, Const):
        return np.full(trace.length, float(expr.value))
    if isinstance(expr, Channel):
        return np.asarray(trace.column(expr.name), dtype=float)
    if isinstance(expr, Add):
        return predicate_signal(trace, expr.lhs) + predicate_signal(trace, expr.rhs)
    if isinstance(expr, Sub):
        return predicate_signal(trace, expr.lhs) - predicate_signal(trace, expr.rhs)
    if isinstance(expr, Scale):
        return expr.factor * predicate_signal(trace, expr.expr)
    if isinstance(expr, Norm):
        if not expr.args:
            raise ValueError("norm() of an empty vector")
        parts = np.stack([predicate_signal(trace, arg) for arg in expr.args])
        return np.sqrt(np.sum(parts * parts, axis=0))
    raise TypeError(f"Not an expression node: {expr!r}")


def window_offsets(dt: float, a: float, b: float) -> Tuple[int, int]:
    """Sample offsets covering [a, b] relative to a grid point, inclusive"""
    eps = dt * WINDOW_GUARD
    lo = math.ceil((a - eps) / dt)
    hi = math.floor((b + eps) / dt)
    if lo > hi:
        raise EmptyWindowError(f"Interval [{a}, {b}] contains no sample at step {dt}")
    return lo, hi


def window_indices(trace: Trace, t: float, a: float, b: float) -> Tuple[int, int]:
    """Inclusive index range of samples with time in [t+a, t+b] (rounding-guarded)"""
    if a > b:
        raise EmptyWindowError(f"Interval [{a}, {b}] is reversed")
    eps = trace.dt * WINDOW_GUARD
    lo = max(math.ceil((t + a - eps - trace.t0) / trace.dt), 0)
    hi = min(math.floor((t + b + eps - trace.t0) / trace.dt), trace.length - 1)
    if lo > hi:
        raise EmptyWindowError(
            f"No samples in [{t + a}, {t + b}] on a trace covering [{trace.t0}, {trace.t_end}]"
        )
    return lo, hi


def window_rows(series: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """Rows k = 0..L-1 holding series[k+lo .. k+hi], L = len(series) - hi

    Raises InsufficientTraceError when no row fits.
    """
    length = series.shape[0] - hi
    if length <= 0:
        raise InsufficientTraceError(
            f"Series of {series.shape[0]} samples is too short for a window reaching offset {hi}"
        )
    return sliding_window_view(series, hi - lo + 1)[lo:lo + length]
