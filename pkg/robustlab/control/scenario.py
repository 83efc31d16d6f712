"""Robot, goal regions and the case-study scenario file"""

import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from robustlab.control.funnels import Funnel, load_funnel, mirror_funnel
from robustlab.core.config import load_model, load_yaml
from robustlab.core.exceptions import ConfigError
from robustlab.formula.ast import Formula
from robustlab.formula.grammar import parse_formula
from robustlab.formula.printer import format_number

logger = logging.getLogger(__name__)

GUIDANCE_LEVELS = ("none", "weak", "strong")


class RobotSpec(BaseModel):
    """Single integrator x' = u with |u| <= u_max, simulated on [0, T] at step dt"""

    x0: Tuple[float, float] = (2.0, 2.0)
    u_max: float = Field(default=1.0, gt=0)
    dt: float = Field(default=0.02, gt=0)
    T: float = Field(default=10.0, gt=0)

    @model_validator(mode="after")
    def horizon_is_whole_steps(self):
        ratio = self.T / self.dt
        if abs(ratio - round(ratio)) > 1e-9 * max(1.0, ratio):
            raise ValueError(f"T={self.T} is not a whole number of steps dt={self.dt}")
        return self

    @property
    def steps(self) -> int:
        """Number of Euler steps; the trace has steps + 1 samples"""
        return int(round(self.T / self.dt))

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(self.steps + 1)


class GoalRegion(BaseModel):
    """Disc of radius `radius` around `center`; robustness is radius - |x - center|"""

    name: str = "goal"
    center: Tuple[float, float]
    radius: float = Field(gt=0)

    def robustness(self, x) -> float:
        return self.radius - math.hypot(x[0] - self.center[0], x[1] - self.center[1])

    def predicate_text(self, channels: Tuple[str, str] = ("x1", "x2")) -> str:
        cx, cy = (format_number(c) for c in self.center)
        return f"{format_number(self.radius)} - norm({channels[0]} - {cx}, {channels[1]} - {cy})"


class GuidanceConfig(BaseModel):
    kappa: float = Field(default=2.0, ge=0)
    delta: float = Field(default=0.05, ge=0)
    funnels: Dict[str, str] = Field(
        default_factory=dict,
        description="Guidance level -> funnel CSV for the first goal (the second is mirrored)"
    )


class Scenario(BaseModel):
    robot: RobotSpec = Field(default_factory=RobotSpec)
    goals: List[GoalRegion]
    formula: str
    guidance: GuidanceConfig = Field(default_factory=GuidanceConfig)
    base_dir: Optional[str] = Field(default=None, description="Directory funnel paths are relative to")

    @field_validator("goals")
    @classmethod
    def two_goals(cls, v: List[GoalRegion]) -> List[GoalRegion]:
        if len(v) != 2:
            raise ValueError("the scenario needs exactly two goal regions")
        return v

    def task_formula(self) -> Formula:
        return parse_formula(self.formula)

    def funnel_path(self, level: str) -> Path:
        if level not in self.guidance.funnels:
            raise ConfigError(
                f"No funnel for guidance level '{level}'; have {', '.join(self.guidance.funnels) or 'none'}"
            )
        path = Path(self.guidance.funnels[level])
        if not path.is_absolute() and self.base_dir:
            path = Path(self.base_dir) / path
        return path

    def guides(self, level: str) -> List[Tuple[Funnel, GoalRegion]]:
        """[(gamma1, g1), (mirror(gamma1), g2)] for a guidance level"""
        gamma1 = load_funnel(self.funnel_path(level))
        if not gamma1.covers(0.0, self.robot.T):
            raise ConfigError(f"Funnel for '{level}' does not cover [0, {self.robot.T}]")
        return [(gamma1, self.goals[0]), (mirror_funnel(gamma1), self.goals[1])]


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario YAML; relative funnel paths resolve against its directory"""
    path = Path(path)
    data = load_yaml(path)
    data.setdefault("base_dir", str(path.parent))
    scenario = load_model(Scenario, data, source=f"scenario {path}")
    logger.debug("Loaded scenario %s with guidance levels %s", path, list(scenario.guidance.funnels))
    return scenario
