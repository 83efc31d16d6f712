"""Tests for guided PI2"""

import numpy as np
import pytest

from robustlab.core.exceptions import NonFiniteError
from robustlab.formula import parse_formula
from robustlab.learning import (
    PI2Config, pi2_update, run_pi2, sample_parameters, save_history, theta_id, trajectory_cost,
)
from robustlab.metrics import NewMetric, TraditionalMetric
from tests.conftest import make_trace

SANITY = "G[0,1](x1 >= -1)"


def _moving_trace():
    n = 51
    return make_trace(x1=2.0 + 0.02 * np.arange(n), x2=np.full(n, 2.0),
                      u1=np.ones(n), u2=np.zeros(n))


def test_trajectory_cost(traditional):
    """Test: J = C when the target is met, C + w * gap otherwise"""
    f = parse_formula(SANITY)
    trace = _moving_trace()
    J, C, rho = trajectory_cost(trace, traditional, f, w=10.0, rho_target=0.05)
    assert rho == pytest.approx(3.0)
    assert C == pytest.approx(1.0)
    assert J == pytest.approx(1.0)

    J, _, _ = trajectory_cost(trace, traditional, f, w=10.0, rho_target=4.0)
    assert J == pytest.approx(11.0)


def test_sample_parameters():
    """Test: First sample is theta itself; rng use is independent of sigma"""
    theta = np.arange(6.0).reshape(3, 2)
    a, b = np.random.default_rng(5), np.random.default_rng(5)
    quiet = sample_parameters(theta, 0.0, 4, a)
    noisy = sample_parameters(theta, 1.0, 4, b)
    assert quiet.shape == (4, 3, 2)
    assert np.array_equal(quiet[0], theta)
    assert np.array_equal(noisy[0], theta)
    assert all(np.array_equal(q, theta) for q in quiet)
    assert not np.array_equal(noisy[1], theta)
    assert a.random() == b.random()


def test_pi2_update_weights():
    """Test: Equal costs average; a large cost gap picks the cheapest"""
    thetas = np.array([[0.0], [2.0]])
    assert pi2_update(thetas, [1.0, 1.0], h=10.0) == pytest.approx([1.0])
    picked = pi2_update(thetas, [0.0, 5.0], h=10.0)
    assert picked == pytest.approx([2.0 * np.exp(-10.0) / (1.0 + np.exp(-10.0))])


def test_pi2_update_rejects_bad_costs():
    """Test: Non-finite or mismatched costs are errors"""
    with pytest.raises(NonFiniteError):
        pi2_update(np.zeros((2, 1)), [0.0, np.nan], h=10.0)
    with pytest.raises(ValueError):
        pi2_update(np.zeros((2, 1)), [0.0], h=10.0)


def test_schedules():
    """Test: Penalty weight ramps to w_max; exploration decays"""
    config = PI2Config(K=4, w_max=100.0, sigma0=0.1, sigma_decay=0.5)
    assert [config.weight(k) for k in (1, 4)] == [25.0, 100.0]
    assert config.sigma(2) == pytest.approx(0.025)
    assert PI2Config(K=0).weight(0) == 0.0


def test_sanity_single_iteration(scenario):
    """Test: One noiseless iteration on G[0,1](x1 >= -1) succeeds at once"""
    config = PI2Config(N=2, K=1, sigma0=0.0, seed=0)
    history = run_pi2(config, scenario, TraditionalMetric(), formula=parse_formula(SANITY))
    assert len(history) == 1
    record = history.final
    assert record.rho == pytest.approx(3.0)
    assert record.cost == 0.0
    assert record.success
    assert history.iterations_to_success() == 1
    assert np.array_equal(history.theta, np.zeros((scenario.robot.steps, 2)))
    assert record.theta_id == theta_id(np.zeros((scenario.robot.steps, 2)))


def test_zero_iterations(scenario):
    """Test: K = 0 leaves theta untouched and records nothing"""
    history = run_pi2(PI2Config(N=2, K=0), scenario, NewMetric(3.0))
    assert len(history) == 0
    assert history.final is None
    assert history.iterations_to_success() is None
    assert not history.theta.any()


def test_runs_are_seed_deterministic(scenario):
    """Test: Same seed, same history; a different seed explores differently"""
    def run(seed, workers=1):
        config = PI2Config(N=4, K=2, sigma0=0.05, seed=seed, max_workers=workers)
        return run_pi2(config, scenario, NewMetric(3.0), guidance="strong")

    first, again, threaded, other = run(1), run(1), run(1, workers=2), run(2)
    assert first.records == again.records
    assert first.records == threaded.records
    assert np.array_equal(first.theta, again.theta)
    assert not np.array_equal(first.theta, other.theta)
    assert first.guidance == "strong"
    assert first.metric == "new(nu=3)"


def test_save_history(tmp_path, scenario):
    """Test: History CSV rows"""
    config = PI2Config(N=2, K=1, sigma0=0.0)
    history = run_pi2(config, scenario, TraditionalMetric(), formula=parse_formula(SANITY))
    path = tmp_path / "history.csv"
    save_history(history, path)
    assert path.read_text(encoding="utf-8").splitlines() == [
        "iteration,rho,cost,J,success", "1,3,0,0,true",
    ]


def test_sample_parameters_blocks():
    """Test: One draw per block of rows; the last block may be shorter"""
    samples = sample_parameters(np.zeros((5, 2)), 1.0, 3, np.random.default_rng(0), block=2)
    assert samples.shape == (3, 5, 2)
    assert not samples[0].any()
    noisy = samples[1]
    assert np.array_equal(noisy[0], noisy[1])
    assert np.array_equal(noisy[2], noisy[3])
    assert not np.array_equal(noisy[1], noisy[2])
    assert not np.array_equal(noisy[3], noisy[4])


@pytest.mark.parametrize("block", [1, 4])
def test_sample_mean_is_near_zero(block):
    """Test: The mean of 10^4 perturbations is within 5 sigma / 100 of zero"""
    sigma = 0.3
    samples = sample_parameters(np.zeros((8, 2)), sigma, 10_001, np.random.default_rng(7), block)
    mean = samples[1:].mean(axis=0)
    assert np.all(np.abs(mean) < 5 * sigma / np.sqrt(10_000))


def test_block_steps():
    """Test: Noise blocks span basis_dt seconds, at least one step"""
    assert PI2Config().block_steps(0.02) == 100
    assert PI2Config(basis_dt=0.5).block_steps(0.02) == 25
    assert PI2Config(basis_dt=0.001).block_steps(0.02) == 1


def test_learns_a_reach_task(scenario):
    """Test: Unguided PI2 learns to push x1 past 2.3 within 2 s"""
    config = PI2Config(N=10, K=30, seed=3)
    history = run_pi2(config, scenario, TraditionalMetric(), formula=parse_formula("F[0,2](x1 >= 2.3)"))
    assert history.records[0].rho == pytest.approx(-0.3)
    assert not history.records[0].success
    assert history.iterations_to_success() is not None
    assert history.rho.max() >= config.rho_target
