"""Tests for learn files"""

import pytest

from robustlab.core.exceptions import ConfigError
from robustlab.learning import load_learn_config, run_learn_config
from tests.conftest import REPO_ROOT

LEARN_DIR = REPO_ROOT / "config" / "learn"


def test_load_learn_file():
    """Test: Scenario path resolves against the learn file"""
    config = load_learn_config(LEARN_DIR / "casestudy.yaml")
    assert config.metric == "new"
    assert config.guidance == "strong"
    assert config.scenario_path().resolve() == (REPO_ROOT / "config" / "scenarios" / "casestudy.yaml")
    pi2 = config.pi2_config()
    assert (pi2.N, pi2.K, pi2.seed) == (20, 120, 0)


@pytest.mark.parametrize("body", [
    "scenario: s.yaml\nmetric: median\n",
    "scenario: s.yaml\nguidance: extreme\n",
    "metric: new\n",
])
def test_invalid_learn_files(tmp_path, body):
    """Test: Unknown metric or guidance and a missing scenario are config errors"""
    path = tmp_path / "learn.yaml"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_learn_config(path)


def test_invalid_pi2_block(tmp_path):
    """Test: Out-of-range PI2 values surface as config errors"""
    path = tmp_path / "learn.yaml"
    path.write_text("scenario: s.yaml\npi2:\n  N: 1\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_learn_config(path).pi2_config()


def test_zero_iteration_run_writes_header(tmp_path):
    """Test: K = 0 writes a header-only history"""
    config = load_learn_config(LEARN_DIR / "zero_iterations.yaml")
    out = tmp_path / "history.csv"
    history = run_learn_config(config, out)
    assert len(history) == 0
    assert out.read_text(encoding="utf-8") == "iteration,rho,cost,J,success\n"
