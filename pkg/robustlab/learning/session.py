"""Learn files: one PI2 run described by a YAML file"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, field_validator

from robustlab.control.scenario import GUIDANCE_LEVELS, load_scenario
from robustlab.core.config import load_model, load_yaml, settings
from robustlab.core.exceptions import MetricError
from robustlab.learning.pi2 import LearningHistory, PI2Config, run_pi2, save_history
from robustlab.metrics.metric_manager import build_metric, metric_manager

logger = logging.getLogger(__name__)


class LearnConfig(BaseModel):
    scenario: str = Field(description="Scenario YAML, relative to the learn file")
    metric: str = "new"
    nu: Optional[float] = Field(default=None, gt=0)
    guidance: str = "none"
    out: str = Field(default="out/learn_history.csv", description="History CSV, relative to the CWD")
    pi2: Dict[str, Any] = Field(default_factory=dict)
    base_dir: Optional[str] = None

    @field_validator("metric")
    @classmethod
    def known_metric(cls, v: str) -> str:
        try:
            return metric_manager.resolve(v)
        except MetricError as e:
            raise ValueError(str(e)) from e

    @field_validator("guidance")
    @classmethod
    def known_level(cls, v: str) -> str:
        if v not in GUIDANCE_LEVELS:
            raise ValueError(f"unknown guidance level '{v}'; choose from {list(GUIDANCE_LEVELS)}")
        return v

    def scenario_path(self) -> Path:
        path = Path(self.scenario)
        if not path.is_absolute() and self.base_dir:
            path = Path(self.base_dir) / path
        return path

    def pi2_config(self) -> PI2Config:
        data = dict(settings.section("pi2"))
        data.update(self.pi2)
        return load_model(PI2Config, data, "pi2 block")


def load_learn_config(path: str | Path) -> LearnConfig:
    path = Path(path)
    data = load_yaml(path)
    data.setdefault("base_dir", str(path.parent))
    return load_model(LearnConfig, data, source=f"learn file {path}")


def run_learn_config(config: LearnConfig, out: Optional[str | Path] = None) -> LearningHistory:
    """Run PI2 as configured and write the history CSV (to `out` when given)"""
    scenario = load_scenario(config.scenario_path())
    metric = build_metric(config.metric, config.nu if config.nu is not None else settings.default_nu)
    history = run_pi2(config.pi2_config(), scenario, metric, guidance=config.guidance)
    target = Path(out or config.out)
    save_history(history, target)
    logger.info("Wrote %d history rows to %s", len(history), target)
    return history
