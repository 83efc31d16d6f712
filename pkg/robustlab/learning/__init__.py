"""Guided PI2 policy search"""

from robustlab.learning.pi2 import (
    LearningHistory, LearningRecord, PI2Config, pi2_update, run_pi2, sample_parameters,
    save_history, theta_id, trajectory_cost,
)
from robustlab.learning.session import LearnConfig, load_learn_config, run_learn_config

__all__ = [
    "LearnConfig", "LearningHistory", "LearningRecord", "PI2Config", "load_learn_config",
    "pi2_update", "run_learn_config", "run_pi2", "sample_parameters", "save_history",
    "theta_id", "trajectory_cost",
]
