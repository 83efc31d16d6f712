"""Prometheus metrics for evaluations, rollouts and learning runs."""
from __future__ import annotations

import time
from contextlib import contextmanager
from pathlib import Path

from prometheus_client import REGISTRY, Counter, Gauge, Histogram, write_to_textfile

# Metrics
evaluations = Counter(
    'robustlab_evaluations_total',
    'Robustness evaluations performed',
    ['metric']
)

rollouts_simulated = Counter(
    'robustlab_rollouts_total',
    'Closed-loop rollouts simulated',
    ['metric']
)

iteration_duration = Histogram(
    'robustlab_pi2_iteration_duration_seconds',
    'Wall time of one PI2 iteration',
    ['metric']
)

property_checks = Counter(
    'robustlab_property_checks_total',
    'Metric property checks run',
    ['property', 'outcome']
)

active_runs = Gauge(
    'robustlab_active_learning_runs',
    'Learning runs currently in progress'
)


@contextmanager
def track_evaluation(metric: str):
    """Count one robustness evaluation (counted even if it raises)."""
    evaluations.labels(metric=metric).inc()
    yield


@contextmanager
def track_rollout(metric: str):
    """Count one simulated rollout."""
    yield
    rollouts_simulated.labels(metric=metric).inc()


@contextmanager
def track_iteration(metric: str):
    """Context manager to time a PI2 iteration.

    Usage:
        with track_iteration("new"):
            # ... sample, score, update ...
    """
    start_time = time.time()
    try:
        yield
    finally:
        iteration_duration.labels(metric=metric).observe(time.time() - start_time)


@contextmanager
def track_learning_run():
    active_runs.inc()
    try:
        yield
    finally:
        active_runs.dec()


def record_check(property_id: str, passed: bool):
    """Record the outcome of a property check."""
    property_checks.labels(property=property_id, outcome="pass" if passed else "fail").inc()


def write_metrics(path: str | Path):
    """Dump the default registry in the Prometheus text format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)


def get_metrics_summary() -> dict:
    """Get summary of current metrics (for debugging)."""
    summary = {}
    for metric in REGISTRY.collect():
        if metric.name.startswith('robustlab_'):
            samples = {}
            for sample in metric.samples:
                label_str = ','.join(f"{k}={v}" for k, v in sample.labels.items())
                samples[f"{sample.name}{{{label_str}}}" if label_str else sample.name] = sample.value
            summary[metric.name] = samples

    return summary
