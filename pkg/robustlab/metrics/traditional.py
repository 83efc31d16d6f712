"""Traditional min-based conjunction"""

import numpy as np

from robustlab.metrics.base import ArrayLike, BaseMetric


class TraditionalMetric(BaseMetric):
    """and(rho_1..rho_M) = min(rho_1..rho_M)"""

    @property
    def name(self) -> str:
        return "traditional"

    @property
    def display_name(self) -> str:
        return "Traditional (min)"

    def _reduce(self, rho: np.ndarray) -> np.ndarray:
        return np.min(rho, axis=1)


def and_traditional(values: ArrayLike) -> float:
    return TraditionalMetric().and_n(values)
