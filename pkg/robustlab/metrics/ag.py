"""Arithmetic-geometric mean conjunction"""

import numpy as np

from robustlab.metrics.base import ArrayLike, BaseMetric


class AGMetric(BaseMetric):
    """Arithmetic mean of the violations when any operand is <= 0,
    geometric mean of (1 + rho) minus one when all operands are positive.

    The violation branch averages min(rho_i, 0), so a violated conjunction is
    negative and the sign matches Boolean satisfaction.
    """

    @property
    def name(self) -> str:
        return "ag"

    @property
    def display_name(self) -> str:
        return "Arithmetic-geometric"

    def _reduce(self, rho: np.ndarray) -> np.ndarray:
        m = rho.shape[1]
        violated = np.min(rho, axis=1) <= 0

        # divide before summing so operands near the float limit do not overflow
        violation = np.sum(np.minimum(rho, 0.0) / m, axis=1)
        # product of (1 + rho) taken in log space
        satisfaction = np.expm1(np.mean(np.log1p(np.maximum(rho, 0.0)), axis=1))

        return np.where(violated, violation, satisfaction)


def and_ag(values: ArrayLike) -> float:
    return AGMetric().and_n(values)
