"""Piecewise-linear guide funnels gamma(t)"""

import csv
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, field_validator

from robustlab.core.exceptions import ConfigError

SPAN_TOLERANCE = 1e-9


class Funnel(BaseModel):
    """Lower bound gamma(t) on a predicate's robustness, linear between knots"""

    knots: List[Tuple[float, float]]

    @field_validator("knots")
    @classmethod
    def knots_are_increasing(cls, v: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
        if not v:
            raise ValueError("a funnel needs at least one knot")
        if not all(np.isfinite(t) and np.isfinite(g) for t, g in v):
            raise ValueError("funnel knots must be finite")
        times = [t for t, _ in v]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("funnel knot times must be strictly increasing")
        return v

    @property
    def times(self) -> np.ndarray:
        return np.array([t for t, _ in self.knots])

    @property
    def gammas(self) -> np.ndarray:
        return np.array([g for _, g in self.knots])

    @property
    def span(self) -> Tuple[float, float]:
        return self.knots[0][0], self.knots[-1][0]

    def covers(self, start: float, stop: float) -> bool:
        lo, hi = self.span
        return lo <= start + SPAN_TOLERANCE and stop - SPAN_TOLERANCE <= hi

    def values(self, times: Sequence[float]) -> np.ndarray:
        """gamma at each time; every time must lie in the knot span"""
        times = np.asarray(times, dtype=float)
        lo, hi = self.span
        if times.size and (times.min() < lo - SPAN_TOLERANCE or times.max() > hi + SPAN_TOLERANCE):
            raise ValueError(f"time outside funnel span [{lo}, {hi}]")
        return np.interp(times, self.times, self.gammas)

    def __call__(self, t: float) -> float:
        return float(self.values([t])[0])


def eval_funnel(funnel: Funnel, t: float) -> float:
    return funnel(t)


def mirror_funnel(funnel: Funnel) -> Funnel:
    """gamma2(t) = 2 gamma1(t0) - gamma1(t), knot by knot"""
    anchor = 2.0 * funnel.knots[0][1]
    return Funnel(knots=[(t, anchor - g) for t, g in funnel.knots])


def constant_funnel(gamma: float, start: float, stop: float) -> Funnel:
    return Funnel(knots=[(start, gamma), (stop, gamma)])


def load_funnel(path: str | Path) -> Funnel:
    """Read a CSV funnel with header 't,gamma'"""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Funnel file not found: {path}")
    with open(path, "r", encoding="utf-8", newline="") as f:
        rows = [row for row in csv.reader(f) if row]
    if not rows or [c.strip() for c in rows[0]] != ["t", "gamma"]:
        raise ConfigError(f"{path}: funnel header must be 't,gamma'")
    try:
        knots = [(float(t), float(g)) for t, g in rows[1:]]
        return Funnel(knots=knots)
    except ValueError as e:
        raise ConfigError(f"{path}: invalid funnel: {e}") from e


def save_funnel(funnel: Funnel, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["t", "gamma"])
        for t, g in funnel.knots:
            writer.writerow([f"{t:.9g}", f"{g:.9g}"])
