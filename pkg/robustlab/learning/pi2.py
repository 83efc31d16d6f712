"""Guided PI2 episodic policy search over per-step feedforward inputs

The policy is pi(x, t) = u_guide(x, t) + k_theta(t) with theta holding one
input per Euler step. Each iteration samples N perturbed parameter sets around
theta (the first one noiseless), scores their rollouts with

    J = C + w_k * max(0, rho_target + rho_margin - rho),   w_k = w_max * k / K,

and moves theta to the exponentiated-cost weighted average of the samples.
Exploration noise is drawn once per block of basis_dt seconds and held over
the block's Euler steps.
"""

import csv
import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from robustlab.control.guidance import Guide
from robustlab.control.scenario import Scenario
from robustlab.control.simulate import input_energy, rollout_traces
from robustlab.core.exceptions import NonFiniteError
from robustlab.formula.ast import Formula
from robustlab.metrics.base import BaseMetric
from robustlab.metrics.new import NewMetric
from robustlab.semantics.robustness import robustness
from robustlab.services.metrics import track_iteration, track_learning_run, track_rollout
from robustlab.services.pool import ordered_map
from robustlab.signals.trace import Trace

logger = logging.getLogger(__name__)

WEIGHT_EPS = 1e-12
HISTORY_HEADER = ["iteration", "rho", "cost", "J", "success"]


class PI2Config(BaseModel):
    """PI2 hyperparameters (profile section `pi2`, or the `pi2` block of a learn file)"""

    N: int = Field(default=20, ge=2, description="Rollouts per iteration")
    K: int = Field(default=120, ge=0, description="Iterations")
    sigma0: float = Field(default=0.2, ge=0, description="Initial exploration std (m/s)")
    sigma_decay: float = Field(default=0.98, gt=0, le=1)
    basis_dt: float = Field(default=2.0, gt=0, description="Noise block length (s)")
    h: float = Field(default=10.0, gt=0, description="Softmax sharpness of the update")
    rho_target: float = 0.05
    rho_margin: float = Field(default=0.01, ge=0,
                              description="The penalty pushes rho this far past rho_target")
    w_max: float = Field(default=100.0, ge=0, description="Final penalty weight")
    seed: int = 0
    nu_final: Optional[float] = Field(
        default=None, gt=0,
        description="When set, nu of the new metric moves linearly to this value over the run"
    )
    max_workers: int = Field(default=1, ge=1, description="Threads scoring an iteration's rollouts")
    log_every: int = Field(default=10, ge=1)

    def sigma(self, k: int) -> float:
        return self.sigma0 * self.sigma_decay ** k

    def weight(self, k: int) -> float:
        return self.w_max * k / self.K if self.K else 0.0

    def block_steps(self, dt: float) -> int:
        return max(1, int(round(self.basis_dt / dt)))


@dataclass(frozen=True)
class LearningRecord:
    """Noiseless evaluation of theta at the start of one iteration"""

    iteration: int
    theta_id: str
    rho: float
    cost: float
    J: float
    success: bool


@dataclass
class LearningHistory:
    records: List[LearningRecord] = field(default_factory=list)
    theta: Optional[np.ndarray] = None
    metric: str = ""
    guidance: str = ""
    seed: int = 0

    def __len__(self) -> int:
        return len(self.records)

    @property
    def final(self) -> Optional[LearningRecord]:
        return self.records[-1] if self.records else None

    @property
    def rho(self) -> np.ndarray:
        return np.array([r.rho for r in self.records])

    @property
    def cost(self) -> np.ndarray:
        return np.array([r.cost for r in self.records])

    def iterations_to_success(self) -> Optional[int]:
        """First iteration whose noiseless rollout met the robustness target"""
        for record in self.records:
            if record.success:
                return record.iteration
        return None


def theta_id(theta: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(theta, dtype=float).tobytes()).hexdigest()[:16]


def trajectory_cost(trace: Trace, metric: BaseMetric, f: Formula, w: float,
                    rho_target: float) -> Tuple[float, float, float]:
    """(J, C, rho) with C the input energy and a hinge penalty below rho_target"""
    rho = robustness(metric, f, trace, 0.0).value
    cost = input_energy(trace)
    penalized = cost + w * max(0.0, rho_target - rho)
    return penalized, cost, rho


def sample_parameters(theta: np.ndarray, sigma: float, n: int,
                      rng: np.random.Generator, block: int = 1) -> np.ndarray:
    """n parameter sets theta + eps, eps ~ N(0, sigma^2) per entry, eps_1 = 0

    With block > 1 one draw covers `block` consecutive rows of theta (the last
    block may be shorter). Always draws the same amount from rng, whatever
    sigma is.
    """
    theta = np.asarray(theta, dtype=float)
    rows = theta.shape[0]
    blocks = -(-rows // block)
    coarse = rng.normal(0.0, 1.0, size=(n - 1, blocks) + theta.shape[1:]) * sigma
    noise = np.repeat(coarse, block, axis=1)[:, :rows]
    return theta[np.newaxis] + np.concatenate([np.zeros((1,) + theta.shape), noise])


def pi2_update(thetas: Sequence[np.ndarray], costs: Sequence[float], h: float) -> np.ndarray:
    """Weighted average with P_i proportional to exp(-h (J_i - J_min) / (J_max - J_min + eps))"""
    costs = np.asarray(costs, dtype=float)
    thetas = np.asarray(thetas, dtype=float)
    if costs.shape[0] != thetas.shape[0] or costs.shape[0] == 0:
        raise ValueError("thetas and costs must be non-empty and of equal length")
    if not np.all(np.isfinite(costs)):
        raise NonFiniteError("Non-finite cost in PI2 update")
    spread = costs.max() - costs.min() + WEIGHT_EPS
    weights = np.exp(-h * (costs - costs.min()) / spread)
    weights /= weights.sum()
    return np.tensordot(weights, thetas, axes=1)


def _metric_at(metric: BaseMetric, config: PI2Config, k: int) -> BaseMetric:
    if config.nu_final is None or not isinstance(metric, NewMetric) or not config.K:
        return metric
    return NewMetric(metric.nu + (config.nu_final - metric.nu) * k / config.K)


def run_pi2(config: PI2Config, scenario: Scenario, metric: BaseMetric,
            formula: Optional[Formula] = None, guidance: Optional[str] = None,
            theta0: Optional[np.ndarray] = None) -> LearningHistory:
    """K iterations of guided PI2; deterministic given config.seed

    guidance names a funnel level of the scenario; None runs without guidance.
    """
    formula = formula if formula is not None else scenario.task_formula()
    spec = scenario.robot
    guides: List[Guide] = scenario.guides(guidance) if guidance else []
    kappa, delta = scenario.guidance.kappa, scenario.guidance.delta
    rng = np.random.default_rng(config.seed)
    block = config.block_steps(spec.dt)
    aim = config.rho_target + config.rho_margin
    theta = np.zeros((spec.steps, 2)) if theta0 is None else np.array(theta0, dtype=float)

    history = LearningHistory(metric=metric.label, guidance=guidance or "off", seed=config.seed)
    logger.info("PI2 start: metric=%s guidance=%s N=%d K=%d seed=%d", metric.label,
                history.guidance, config.N, config.K, config.seed)

    with track_learning_run():
        for k in range(1, config.K + 1):
            with track_iteration(metric.name):
                current = _metric_at(metric, config, k)
                w = config.weight(k)
                samples = sample_parameters(theta, config.sigma(k), config.N, rng, block)
                traces = rollout_traces(spec, samples, guides, kappa, delta)

                def score(trace: Trace) -> Tuple[float, float, float]:
                    with track_rollout(current.name):
                        return trajectory_cost(trace, current, formula, w, aim)

                scored = ordered_map(score, traces, config.max_workers)
                penalized, cost, rho = scored[0]
                history.records.append(LearningRecord(
                    iteration=k,
                    theta_id=theta_id(theta),
                    rho=rho,
                    cost=cost,
                    J=penalized,
                    success=rho >= config.rho_target,
                ))
                logger.debug("iteration %d: %s", k, [round(s[0], 6) for s in scored])
                theta = pi2_update(samples, [s[0] for s in scored], config.h)

            if k % config.log_every == 0 or k == config.K:
                logger.info("PI2 %s/%s iteration %d/%d: rho=%.4f C=%.4f J=%.4f", metric.label,
                            history.guidance, k, config.K, rho, cost, penalized)

    history.theta = theta
    return history


def save_history(history: LearningHistory, path: str | Path) -> None:
    """CSV with header iteration,rho,cost,J,success"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(HISTORY_HEADER)
        for r in history.records:
            writer.writerow([r.iteration, f"{r.rho:.9g}", f"{r.cost:.9g}", f"{r.J:.9g}",
                             "true" if r.success else "false"])
