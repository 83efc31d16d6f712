"""Metric x guidance sweeps of guided PI2 on the two-goal case study"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from robustlab.control.scenario import GUIDANCE_LEVELS, Scenario, load_scenario
from robustlab.core.config import load_model, settings
from robustlab.core.exceptions import MetricError
from robustlab.learning.pi2 import PI2Config, run_pi2
from robustlab.metrics.metric_manager import build_metric, metric_manager
from robustlab.services.pool import ordered_map

logger = logging.getLogger(__name__)

QUANTILES = (10, 50, 90)


class ExperimentPlan(BaseModel):
    """Which configurations and seeds to run (profile section `casestudy`)"""

    scenario: str = "config/scenarios/casestudy.yaml"
    metrics: List[str] = Field(default_factory=lambda: ["traditional", "ag", "new"], min_length=1)
    guidance: List[str] = Field(default_factory=lambda: list(GUIDANCE_LEVELS), min_length=1)
    seeds: List[int] = Field(default_factory=lambda: list(range(10)), min_length=1)
    nu: float = Field(default=3.0, gt=0)
    pi2: Dict[str, Any] = Field(default_factory=dict, description="PI2Config overrides")
    success_rho: float = 0.05
    feasible_cost: float = Field(default=3.0, gt=0, description="Final cost separating the feasible basin")
    max_workers: int = Field(default=1, ge=1)

    @field_validator("metrics")
    @classmethod
    def known_metrics(cls, v: List[str]) -> List[str]:
        try:
            return [metric_manager.resolve(name) for name in v]
        except MetricError as e:
            raise ValueError(str(e)) from e

    @field_validator("guidance")
    @classmethod
    def known_levels(cls, v: List[str]) -> List[str]:
        unknown = [g for g in v if g not in GUIDANCE_LEVELS]
        if unknown:
            raise ValueError(f"unknown guidance levels {unknown}; choose from {list(GUIDANCE_LEVELS)}")
        return v

    def pi2_config(self, seed: int) -> PI2Config:
        base = dict(settings.section("pi2"))
        base.update(self.pi2)
        base["seed"] = seed
        return load_model(PI2Config, base, "pi2 settings")


def plan_from_profile(**overrides: Any) -> ExperimentPlan:
    """Profile section `casestudy`, with None-valued overrides ignored"""
    data = dict(settings.section("casestudy"))
    data.setdefault("max_workers", settings.max_workers)
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if "pi2" in overrides:
        overrides["pi2"] = {**data.get("pi2", {}), **overrides["pi2"]}
    data.update(overrides)
    return load_model(ExperimentPlan, data, "case-study plan")


@dataclass(frozen=True)
class RunOutcome:
    metric: str
    guidance: str
    seed: int
    rho: np.ndarray
    cost: np.ndarray
    iterations_to_success: Optional[int]
    success: bool

    @property
    def final_rho(self) -> float:
        return float(self.rho[-1]) if self.rho.size else math.nan

    @property
    def final_cost(self) -> float:
        return float(self.cost[-1]) if self.cost.size else math.nan


@dataclass
class ConfigurationSummary:
    metric: str
    guidance: str
    runs: int
    successes: int
    iterations: Tuple[float, float, float]
    final_cost: Tuple[float, float, float]
    # per iteration: (median, p10, p90); cost bands only cover successful runs
    rho_bands: np.ndarray = field(default_factory=lambda: np.empty((0, 3)))
    cost_bands: np.ndarray = field(default_factory=lambda: np.empty((0, 3)))

    @property
    def success_rate(self) -> float:
        return self.successes / self.runs if self.runs else 0.0


@dataclass
class ExperimentSummary:
    configurations: List[ConfigurationSummary]
    runs: List[RunOutcome]

    def get(self, metric: str, guidance: str) -> ConfigurationSummary:
        for c in self.configurations:
            if c.metric == metric and c.guidance == guidance:
                return c
        raise KeyError((metric, guidance))


def _quantiles(values: List[float]) -> Tuple[float, float, float]:
    if not values:
        return (math.nan, math.nan, math.nan)
    p10, p50, p90 = np.percentile(np.asarray(values, dtype=float), QUANTILES)
    return float(p10), float(p50), float(p90)


def _bands(curves: List[np.ndarray], length: int) -> np.ndarray:
    if not curves:
        return np.full((length, 3), np.nan)
    stacked = np.stack(curves)
    p10, p50, p90 = np.percentile(stacked, QUANTILES, axis=0)
    return np.column_stack([p50, p10, p90])


def _run_one(task: Tuple[Scenario, ExperimentPlan, str, str, int]) -> RunOutcome:
    scenario, plan, metric_name, guidance, seed = task
    metric = build_metric(metric_name, plan.nu)
    history = run_pi2(plan.pi2_config(seed), scenario, metric, guidance=guidance)
    final = history.final
    success = (final is not None and final.rho >= plan.success_rho
               and final.cost < plan.feasible_cost)
    return RunOutcome(
        metric=metric_name,
        guidance=guidance,
        seed=seed,
        rho=history.rho,
        cost=history.cost,
        iterations_to_success=history.iterations_to_success(),
        success=success,
    )


def summarize(metric: str, guidance: str, outcomes: List[RunOutcome]) -> ConfigurationSummary:
    succeeded = [o for o in outcomes if o.success]
    length = min((o.rho.size for o in outcomes), default=0)
    summary = ConfigurationSummary(
        metric=metric,
        guidance=guidance,
        runs=len(outcomes),
        successes=len(succeeded),
        iterations=_quantiles([o.iterations_to_success for o in succeeded
                               if o.iterations_to_success is not None]),
        final_cost=_quantiles([o.final_cost for o in succeeded]),
        rho_bands=_bands([o.rho[:length] for o in outcomes], length),
        cost_bands=_bands([o.cost[:length] for o in succeeded], length),
    )
    logger.info("%s / %s: %d/%d successful", metric, guidance, summary.successes, summary.runs)
    return summary


def run_casestudy(plan: ExperimentPlan, scenario: Optional[Scenario] = None) -> ExperimentSummary:
    """Run every (metric, guidance, seed) and aggregate per configuration

    Runs fan out over plan.max_workers processes; results are reduced in
    (metric, guidance, seed) order, so the summary does not depend on scheduling.
    """
    scenario = scenario or load_scenario(plan.scenario)
    tasks = [(scenario, plan, m, g, s) for m in plan.metrics for g in plan.guidance for s in plan.seeds]
    logger.info("Case study: %d configurations x %d seeds on %d workers",
                len(plan.metrics) * len(plan.guidance), len(plan.seeds), plan.max_workers)

    outcomes = ordered_map(_run_one, tasks, plan.max_workers, processes=True)

    configurations = []
    for m in plan.metrics:
        for g in plan.guidance:
            group = [o for o in outcomes if o.metric == m and o.guidance == g]
            configurations.append(summarize(m, g, group))
    return ExperimentSummary(configurations=configurations, runs=outcomes)
