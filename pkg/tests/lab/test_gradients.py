"""Tests for finite-difference probes"""

import pytest

from robustlab.core.exceptions import MetricError
from robustlab.lab import GradientProbe, numeric_partial, one_sided_partials, probe_partial
from robustlab.metrics import NewMetric


def test_min_follows_unique_minimum(traditional):
    """Test: Partials of min at {1, 2}"""
    assert numeric_partial(traditional, [1.0, 2.0], 0, 1e-5) == pytest.approx(1.0)
    assert numeric_partial(traditional, [1.0, 2.0], 1, 1e-5) == pytest.approx(0.0)


@pytest.mark.parametrize("i", [0, 1, 2])
def test_new_equal_point_gradient(i):
    """Test: nu = 1 at {-1, -1, -1} has partials 1/3"""
    assert numeric_partial(NewMetric(1.0), [-1.0, -1.0, -1.0], i, 1e-5) == pytest.approx(1 / 3, abs=1e-3)


def test_new_shadow_lifting_partials(new):
    """Test: nu = 3 at {1, 1}: both one-sided partials near 1/2"""
    backward, forward = one_sided_partials(new, [1.0, 1.0], 0, 1e-5)
    assert backward == pytest.approx(0.5, abs=1e-3)
    assert forward == pytest.approx(0.5, abs=1e-3)


@pytest.mark.parametrize("nu,point", [(1.0, [0.0, 1.0]), (3.0, [0.0, 0.5, 2.0])])
def test_new_boundary_derivative(nu, point):
    """Test: Partial 1 w.r.t. the operand at zero"""
    assert numeric_partial(NewMetric(nu), point, 0, 1e-5) == pytest.approx(1.0, abs=1e-3)


def test_min_boundary_derivative(traditional):
    """Test: min at {0, 1} tracks its unique minimum"""
    assert numeric_partial(traditional, [0.0, 1.0], 0, 1e-5) == pytest.approx(1.0)


def test_min_kink_at_equal_points(traditional):
    """Test: One-sided quotients of min differ at ties"""
    backward, forward = one_sided_partials(traditional, [1.0, 1.0], 0, 1e-5)
    assert backward == pytest.approx(1.0)
    assert forward == 0.0


def test_bad_step_and_coordinate(traditional):
    """Test: Non-positive step and out-of-range coordinate"""
    with pytest.raises(MetricError):
        numeric_partial(traditional, [1.0, 2.0], 0, 0.0)
    with pytest.raises(MetricError):
        one_sided_partials(traditional, [1.0, 2.0], 0, -1e-5)
    with pytest.raises(IndexError):
        numeric_partial(traditional, [1.0, 2.0], 2, 1e-5)


def test_probe_model(ag):
    """Test: Probe carries the point, index, step and estimate"""
    probe = probe_partial(ag, [-1.0, 2.0], 0, 1e-5)
    assert isinstance(probe, GradientProbe)
    assert probe.point == [-1.0, 2.0]
    assert probe.estimate == pytest.approx(0.5)
