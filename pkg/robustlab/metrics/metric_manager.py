"""Metric manager - handles metric registration and lookup"""

from typing import Callable, Dict, List, Optional

from robustlab.core.exceptions import MetricError
from robustlab.metrics.ag import AGMetric
from robustlab.metrics.base import BaseMetric
from robustlab.metrics.new import DEFAULT_NU, NewMetric
from robustlab.metrics.traditional import TraditionalMetric

MetricFactory = Callable[[Optional[float]], BaseMetric]


class MetricManager:
    """Metric manager - maps metric names (and aliases) to factories"""

    def __init__(self):
        self._factories: Dict[str, MetricFactory] = {}
        self._aliases: Dict[str, str] = {}

    def register(self, name: str, factory: MetricFactory, aliases: tuple = ()):
        """Register a metric factory; the factory receives nu (or None)"""
        self._factories[name] = factory
        for alias in aliases:
            self._aliases[alias] = name

    def resolve(self, name: str) -> str:
        key = name.strip().lower()
        key = self._aliases.get(key, key)
        if key not in self._factories:
            raise MetricError(f"Unknown metric '{name}'; choose from {', '.join(self.list_metrics())}")
        return key

    def get(self, name: str, nu: Optional[float] = None) -> BaseMetric:
        """Build the metric called `name`; nu only affects parameterized metrics"""
        return self._factories[self.resolve(name)](nu)

    def list_metrics(self) -> List[str]:
        """List registered metric names"""
        return list(self._factories)

    def build_all(self, nu: Optional[float] = None) -> List[BaseMetric]:
        return [self.get(name, nu) for name in self._factories]


# Global metric manager instance
metric_manager = MetricManager()
metric_manager.register("traditional", lambda nu: TraditionalMetric(), aliases=("trad", "min"))
metric_manager.register("ag", lambda nu: AGMetric(), aliases=("arithmetic-geometric",))
metric_manager.register("new", lambda nu: NewMetric(DEFAULT_NU if nu is None else nu))


def build_metric(name: str, nu: Optional[float] = None) -> BaseMetric:
    return metric_manager.get(name, nu)
