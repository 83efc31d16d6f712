"""Pytest configuration and fixtures"""

from pathlib import Path

import numpy as np
import pytest

from robustlab.control.scenario import load_scenario
from robustlab.metrics import AGMetric, NewMetric, TraditionalMetric
from robustlab.signals.trace import Trace, save_trace

REPO_ROOT = Path(__file__).resolve().parent.parent
SCENARIO_PATH = REPO_ROOT / "config" / "scenarios" / "casestudy.yaml"


@pytest.fixture
def traditional():
    return TraditionalMetric()


@pytest.fixture
def ag():
    return AGMetric()


@pytest.fixture
def new():
    """New metric with the case-study sharpness nu = 3"""
    return NewMetric(3.0)


@pytest.fixture(params=["traditional", "ag", "new"])
def any_metric(request):
    return {"traditional": TraditionalMetric(), "ag": AGMetric(), "new": NewMetric(3.0)}[request.param]


@pytest.fixture
def scenario():
    return load_scenario(SCENARIO_PATH)


@pytest.fixture
def in_repo_root(monkeypatch):
    """Run with the repository root as CWD so profile-relative paths resolve"""
    monkeypatch.chdir(REPO_ROOT)
    return REPO_ROOT


def make_trace(dt: float = 0.02, **columns) -> Trace:
    names = tuple(columns)
    samples = np.column_stack([np.asarray(columns[n], dtype=float) for n in names])
    return Trace(t0=0.0, dt=dt, channels=names, samples=samples)


@pytest.fixture
def trace_file(tmp_path):
    """Factory writing a trace CSV and returning its path"""
    def write(name: str = "trace.csv", dt: float = 0.02, **columns) -> Path:
        path = tmp_path / name
        save_trace(make_trace(dt, **columns), path)
        return path

    return write
