"""Tests for case-study sweeps, their summaries and CSV exports"""

import csv
import math

import numpy as np
import pytest

from robustlab.core.exceptions import ConfigError
from robustlab.experiments import (
    ExperimentPlan, RunOutcome, export_curves, plan_from_profile, run_casestudy, summarize,
    write_summary,
)
from robustlab.experiments.export import CURVE_HEADER, SUMMARY_HEADER
from tests.conftest import SCENARIO_PATH


def _outcome(seed, rho, cost, success, first=None):
    return RunOutcome(metric="new", guidance="strong", seed=seed, rho=np.asarray(rho, dtype=float),
                      cost=np.asarray(cost, dtype=float), iterations_to_success=first, success=success)


def _read(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.reader(f))


def test_plan_validation():
    """Test: Metric aliases resolve; unknown metrics and levels are rejected"""
    plan = ExperimentPlan(metrics=["trad", "new"], seeds=[0])
    assert plan.metrics == ["traditional", "new"]
    with pytest.raises(ValueError):
        ExperimentPlan(metrics=["median"])
    with pytest.raises(ValueError):
        ExperimentPlan(guidance=["extreme"])


def test_pi2_overrides_and_seed():
    """Test: Plan PI2 overrides apply and each run gets its own seed"""
    plan = ExperimentPlan(pi2={"K": 3, "N": 5})
    config = plan.pi2_config(7)
    assert (config.K, config.N, config.seed) == (3, 5, 7)
    with pytest.raises(ConfigError):
        ExperimentPlan(pi2={"N": 1}).pi2_config(0)


def test_plan_from_profile_ignores_none():
    """Test: None overrides keep profile values; pi2 overrides merge"""
    plan = plan_from_profile(metrics=None, seeds=[3], pi2={"K": 1})
    assert plan.seeds == [3]
    assert plan.pi2["K"] == 1
    assert plan.metrics


def test_summarize_statistics():
    """Test: Success rate, iteration and cost quantiles over successful runs"""
    outcomes = [
        _outcome(0, [0.0, 0.1], [4.0, 2.0], True, first=2),
        _outcome(1, [0.1, 0.2], [3.0, 2.5], True, first=1),
        _outcome(2, [-0.5, -0.4], [1.0, 1.0], False),
    ]
    summary = summarize("new", "strong", outcomes)
    assert (summary.runs, summary.successes) == (3, 2)
    assert summary.success_rate == pytest.approx(2 / 3)
    assert summary.iterations[1] == pytest.approx(1.5)
    assert summary.final_cost[1] == pytest.approx(2.25)
    assert summary.rho_bands.shape == (2, 3)
    assert summary.rho_bands[0, 0] == pytest.approx(0.0)
    assert summary.cost_bands[1, 0] == pytest.approx(2.25)


def test_summarize_without_successes():
    """Test: No successful run leaves nan cost bands"""
    summary = summarize("ag", "none", [_outcome(0, [-1.0], [0.5], False)])
    assert summary.success_rate == 0.0
    assert all(math.isnan(v) for v in summary.final_cost)
    assert np.isnan(summary.cost_bands).all()
    assert summary.rho_bands.shape == (1, 3)


def test_zero_iterations_never_succeed(tmp_path):
    """Test: K = 0 runs record nothing and count as failures"""
    plan = ExperimentPlan(scenario=str(SCENARIO_PATH), metrics=["traditional"], guidance=["none"],
                          seeds=[0, 1], pi2={"K": 0, "N": 2})
    summary = run_casestudy(plan)
    config = summary.get("traditional", "none")
    assert config.runs == 2
    assert config.success_rate == 0.0
    assert config.rho_bands.shape == (0, 3)
    assert all(math.isnan(r.final_rho) for r in summary.runs)

    (curves,) = export_curves(summary, tmp_path)
    assert curves.name == "curves_traditional_none.csv"
    assert _read(curves) == [CURVE_HEADER]
    with pytest.raises(KeyError):
        summary.get("new", "none")


def test_small_sweep_and_exports(tmp_path):
    """Test: Two iterations per run give two-row bands and both summary files"""
    plan = ExperimentPlan(scenario=str(SCENARIO_PATH), metrics=["traditional", "new"],
                          guidance=["none", "strong"], seeds=[0, 1], pi2={"K": 2, "N": 3})
    summary = run_casestudy(plan)
    assert len(summary.configurations) == 4
    assert len(summary.runs) == 8
    assert [(r.metric, r.guidance, r.seed) for r in summary.runs][:2] == [
        ("traditional", "none", 0), ("traditional", "none", 1),
    ]
    for config in summary.configurations:
        assert config.rho_bands.shape == (2, 3)
        assert np.all(config.rho_bands[:, 1] <= config.rho_bands[:, 2])

    summary_path, table_path = write_summary(summary, tmp_path)
    rows = _read(summary_path)
    assert rows[0] == SUMMARY_HEADER
    assert [r[:3] for r in rows[1:]] == [
        ["traditional", "none", "2"], ["traditional", "strong", "2"],
        ["new", "none", "2"], ["new", "strong", "2"],
    ]
    table = _read(table_path)
    assert table[0] == ["metric", "none", "strong"]
    assert [r[0] for r in table[1:]] == ["traditional", "new"]

    paths = export_curves(summary, tmp_path)
    assert len(paths) == 4
    assert len(_read(paths[0])) == 3


def test_sweep_is_scheduling_independent():
    """Test: Two worker processes give the same outcomes as one"""
    kwargs = dict(scenario=str(SCENARIO_PATH), metrics=["ag"], guidance=["weak"],
                  seeds=[0, 1], pi2={"K": 1, "N": 2})
    inline = run_casestudy(ExperimentPlan(max_workers=1, **kwargs))
    pooled = run_casestudy(ExperimentPlan(max_workers=2, **kwargs))
    for a, b in zip(inline.runs, pooled.runs):
        assert a.seed == b.seed
        assert np.array_equal(a.rho, b.rho)
        assert np.array_equal(a.cost, b.cost)
