"""Finite-difference probes of a conjunction operator"""

import math
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from robustlab.core.exceptions import MetricError, NonFiniteError
from robustlab.metrics.base import BaseMetric


class GradientProbe(BaseModel):
    """Central-difference estimate of d and_M / d rho_i at one point"""

    point: List[float]
    index: int = Field(ge=0)
    step: float = Field(gt=0)
    estimate: float

    @field_validator("estimate")
    @classmethod
    def estimate_is_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("estimate must be finite")
        return v


def _value(metric: BaseMetric, point: np.ndarray) -> float:
    value = metric.and_n(point)
    if not math.isfinite(value):
        raise NonFiniteError(f"{metric.label} is not finite at {point.tolist()}")
    return value


def _shifted(point: Sequence[float], i: int, delta: float) -> np.ndarray:
    shifted = np.array(point, dtype=float)
    shifted[i] += delta
    return shifted


def relative_step(rho: float, scale: float = 1e-5) -> float:
    """Step h = scale * max(1, |rho|)"""
    return scale * max(1.0, abs(rho))


def numeric_partial(metric: BaseMetric, point: Sequence[float], i: int, h: float) -> float:
    """(f(rho_i + h) - f(rho_i - h)) / 2h"""
    if not h > 0:
        raise MetricError(f"Finite-difference step must be positive, got {h}")
    if not 0 <= i < len(point):
        raise IndexError(f"Coordinate {i} out of range for a point of size {len(point)}")
    upper = _value(metric, _shifted(point, i, h))
    lower = _value(metric, _shifted(point, i, -h))
    return (upper - lower) / (2.0 * h)


def one_sided_partials(metric: BaseMetric, point: Sequence[float], i: int,
                       h: float) -> Tuple[float, float]:
    """Backward and forward difference quotients of coordinate i"""
    if not h > 0:
        raise MetricError(f"Finite-difference step must be positive, got {h}")
    center = _value(metric, np.asarray(point, dtype=float))
    backward = (center - _value(metric, _shifted(point, i, -h))) / h
    forward = (_value(metric, _shifted(point, i, h)) - center) / h
    return backward, forward


def probe_partial(metric: BaseMetric, point: Sequence[float], i: int, h: float) -> GradientProbe:
    return GradientProbe(
        point=[float(p) for p in point],
        index=i,
        step=h,
        estimate=numeric_partial(metric, point, i, h),
    )
