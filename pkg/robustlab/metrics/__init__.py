"""Conjunction operators that define a robustness metric, plus their registry"""

from robustlab.metrics.ag import AGMetric, and_ag
from robustlab.metrics.base import TRUE_ROBUSTNESS, BaseMetric
from robustlab.metrics.metric_manager import MetricManager, build_metric, metric_manager
from robustlab.metrics.new import DEFAULT_NU, NewMetric, and_new
from robustlab.metrics.traditional import TraditionalMetric, and_traditional

__all__ = [
    "AGMetric", "BaseMetric", "DEFAULT_NU", "MetricManager", "NewMetric",
    "TRUE_ROBUSTNESS", "TraditionalMetric", "and_ag", "and_new", "and_traditional",
    "build_metric", "metric_manager",
]
