"""Tests for the property suite: the per-metric pass/fail table"""

import numpy as np
import pytest

from robustlab.lab import (
    LabConfig, check_limit_behavior, check_non_monotone_lift, check_scale_invariance,
    check_shadow_lifting, check_soundness, conjunction_curves, run_all_checks, write_curves_csv,
)
from robustlab.lab.report import PROPERTY_ORDER
from robustlab.metrics import AGMetric, NewMetric, TraditionalMetric

CONFIG = LabConfig(samples=300, soundness_formulas=20, seed=0)

EXPECTED = {
    "traditional": {"P1": True, "P2": True, "P3": False, "P4": False, "P5": True, "P6": True,
                    "Kink": True, "EqGrad": False, "Edge": True, "Limit": True, "Lift": False},
    "ag": {"P1": True, "P2": True, "P3": False, "P4": True, "P5": True, "P6": False,
           "Kink": True, "EqGrad": True, "Edge": False, "Limit": False, "Lift": False},
    "new": {p: True for p in PROPERTY_ORDER},
}


@pytest.fixture(scope="module")
def table():
    metrics = {"traditional": TraditionalMetric(), "ag": AGMetric(), "new": NewMetric(3.0)}
    return {name: run_all_checks(metric, CONFIG) for name, metric in metrics.items()}


@pytest.mark.parametrize("name", ["traditional", "ag", "new"])
def test_property_table(table, name):
    """Test: Each metric passes and fails the expected properties"""
    reports = table[name]
    assert [r.property_id for r in reports] == PROPERTY_ORDER
    assert {r.property_id: r.passed for r in reports} == EXPECTED[name]


def test_failures_carry_witnesses(table):
    """Test: Every failed report names the point that failed"""
    for reports in table.values():
        for r in reports:
            if not r.passed:
                assert r.witness
                assert r.max_violation > r.tolerance


def test_checks_are_seed_deterministic():
    """Test: Same seed, same reports"""
    first = run_all_checks(AGMetric(), LabConfig(samples=50, soundness_formulas=5, seed=3))
    second = run_all_checks(AGMetric(), LabConfig(samples=50, soundness_formulas=5, seed=3))
    assert [r.model_dump() for r in first] == [r.model_dump() for r in second]


def test_scale_invariance_witness_ends_with_alpha(ag):
    """Test: AG fails scale invariance and the witness ends with alpha"""
    report = check_scale_invariance(ag, 100, np.random.default_rng(0))
    assert not report.passed
    assert report.witness[-1] in (1e-3, 0.1, 1.0, 10.0, 1e3)


def test_shadow_lifting_min_fails(traditional):
    """Test: min has a zero one-sided derivative at ties"""
    assert not check_shadow_lifting(traditional, 20, np.random.default_rng(0)).passed


def test_limit_of_new_metric():
    """Test: nu = 1, and(-1, 1e6) is within 1e-3 of -1"""
    assert NewMetric(1.0).and_n([-1.0, 1e6]) == pytest.approx(-1.0, abs=1e-3)
    assert check_limit_behavior(NewMetric(1.0)).passed


def test_lift_of_new_metric_is_not_monotone(new):
    """Test: and(-1, rho) rises above -1 and comes back"""
    report = check_non_monotone_lift(new)
    assert report.passed
    assert report.witness[1] > -1.0


@pytest.mark.parametrize("metric", [TraditionalMetric(), AGMetric(), NewMetric(3.0)], ids=str)
def test_soundness(metric):
    """Test: Robustness sign agrees with satisfaction on random formulas"""
    report = check_soundness(metric, 15, np.random.default_rng(11))
    assert report.passed
    assert report.samples > 0


@pytest.mark.parametrize("name, metric", [
    ("traditional", TraditionalMetric()), ("ag", AGMetric()),
    ("new", NewMetric(1.0)), ("new", NewMetric(3.0)),
], ids=["traditional", "ag", "new-1", "new-3"])
def test_default_config_table(name, metric):
    """Test: The table at the default sample counts, for nu = 1 as well as nu = 3"""
    assert LabConfig().samples == 1000 and LabConfig().soundness_formulas == 100
    reports = run_all_checks(metric, LabConfig())
    assert {r.property_id: r.passed for r in reports} == EXPECTED[name]


@pytest.mark.parametrize("metric", [TraditionalMetric(), AGMetric(), NewMetric(3.0)], ids=str)
def test_soundness_on_500_formulas(metric):
    """Test: No sign disagreement over 500 random formula/trace pairs"""
    report = check_soundness(metric, 500, np.random.default_rng(2024))
    assert report.passed
    assert report.max_violation == 0.0


def test_conjunction_curves(tmp_path):
    """Test: Two sweeps per metric, written as CSV"""
    metrics = [TraditionalMetric(), NewMetric(1.0)]
    rows = conjunction_curves(metrics, points=11)
    assert len(rows) == 2 * 11 * 2
    assert {r["rho1"] for r in rows} == {-1.0, 1.0}
    trad_first = [r for r in rows if r["metric"] == "traditional" and r["rho1"] == -1.0]
    assert all(r["value"] == min(-1.0, r["rho2"]) for r in trad_first)

    path = tmp_path / "curves.csv"
    write_curves_csv(rows, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "metric,rho1,rho2,value"
    assert len(lines) == len(rows) + 1
