"""Smooth sound conjunction with sharpness parameter nu

With rho_min = min(rho) and relative gaps r_i = (rho_i - rho_min) / rho_min:

    rho_min < 0:  sum(rho_min * e^{r_i} * e^{nu r_i}) / sum(e^{nu r_i})
    rho_min > 0:  sum(rho_i * e^{-nu r_i}) / sum(e^{-nu r_i})
    rho_min = 0:  0

Every exponent is <= 0 in both branches, so evaluation cannot overflow; the
operator tends to min as nu grows.
"""

import numpy as np

from robustlab.core.exceptions import MetricError
from robustlab.metrics.base import ArrayLike, BaseMetric

DEFAULT_NU = 3.0


class NewMetric(BaseMetric):

    def __init__(self, nu: float = DEFAULT_NU):
        nu = float(nu)
        if not (np.isfinite(nu) and nu > 0):
            raise MetricError(f"nu must be a positive finite number, got {nu}")
        self._nu = nu

    @property
    def nu(self) -> float:
        return self._nu

    @property
    def name(self) -> str:
        return "new"

    @property
    def display_name(self) -> str:
        return f"New (nu={self._nu:g})"

    @property
    def params(self):
        return {"nu": self._nu}

    def _reduce(self, rho: np.ndarray) -> np.ndarray:
        nu = self._nu
        rmin = np.min(rho, axis=1, keepdims=True)
        safe = np.where(rmin == 0.0, 1.0, rmin)

        with np.errstate(over="ignore", invalid="ignore"):
            gap = rho - rmin
            scaled = np.abs(gap / safe)
            weights = np.exp(-nu * scaled)
            total = np.sum(weights, axis=1)

            violated = rmin[:, 0] * np.sum(np.exp(-scaled) * weights, axis=1) / total
            # rho_i = rho_min + gap keeps all-equal operands exact
            satisfied = rmin[:, 0] + np.sum(np.where(weights > 0, gap * weights, 0.0), axis=1) / total

        return np.where(rmin[:, 0] < 0, violated,
                        np.where(rmin[:, 0] > 0, satisfied, 0.0))


def and_new(values: ArrayLike, nu: float = DEFAULT_NU) -> float:
    return NewMetric(nu).and_n(values)
