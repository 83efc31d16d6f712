"""Base metric class - every conjunction operator inherits from this"""

from abc import ABC, abstractmethod
from typing import Dict, Union

import numpy as np

from robustlab.core.exceptions import MetricError, NonFiniteError

ArrayLike = Union[np.ndarray, list, tuple]

# Robustness of the literal `true`; finite so weighted averages stay finite
TRUE_ROBUSTNESS = float(np.finfo(float).max)


class BaseMetric(ABC):
    """A robustness metric is fixed by its M-ary conjunction

    Negation is always N(rho) = -rho, so disjunction follows by De Morgan.
    Implementations are pure: evaluating never mutates the metric.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique metric identifier, e.g. 'traditional'"""
        pass

    @property
    @abstractmethod
    def display_name(self) -> str:
        """Human-readable label used in tables and plots"""
        pass

    @property
    def params(self) -> Dict[str, float]:
        """Metric parameters (empty when the operator has none)"""
        return {}

    @property
    def label(self) -> str:
        """Name with parameters, e.g. 'new(nu=3)'"""
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}({inner})"

    @abstractmethod
    def _reduce(self, rho: np.ndarray) -> np.ndarray:
        """Conjunction of each row of a (L, M) array with M >= 2, returning shape (L,)"""
        pass

    def and_n(self, values: ArrayLike):
        """M-ary conjunction

        A 1-D input is one conjunction and returns a float. A 2-D input holds one
        conjunction per row and returns an array with one value per row.
        """
        rho = np.asarray(values, dtype=float)
        if rho.ndim not in (1, 2):
            raise MetricError(f"Expected a 1-D or 2-D operand array, got shape {rho.shape}")
        if rho.shape[-1] == 0:
            raise MetricError("Conjunction of an empty operand list")
        if np.isnan(rho).any():
            raise NonFiniteError("NaN operand in conjunction")

        if rho.ndim == 1:
            if rho.shape[0] == 1:
                return float(rho[0])
            return float(self._reduce(rho[np.newaxis, :])[0])
        if rho.shape[1] == 1:
            return rho[:, 0].copy()
        return self._reduce(rho)

    def or_n(self, values: ArrayLike):
        """M-ary disjunction: -and_n(-rho)"""
        return -self.and_n(-np.asarray(values, dtype=float))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label}>"

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.params == other.params

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(sorted(self.params.items()))))
