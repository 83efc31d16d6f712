"""Single-integrator robot, goal regions, guide funnels and the guidance law"""

from robustlab.control.funnels import (
    Funnel, constant_funnel, eval_funnel, load_funnel, mirror_funnel, save_funnel,
)
from robustlab.control.guidance import guidance_control, saturate
from robustlab.control.scenario import (
    GUIDANCE_LEVELS, GoalRegion, GuidanceConfig, RobotSpec, Scenario, load_scenario,
)
from robustlab.control.simulate import (
    TRACE_CHANNELS, feedforward_policy, input_energy, plan_is_feasible, rollout_traces,
    simulate, simulate_batch, waypoint_feedforward,
)

__all__ = [
    "Funnel", "GUIDANCE_LEVELS", "GoalRegion", "GuidanceConfig", "RobotSpec", "Scenario",
    "TRACE_CHANNELS", "constant_funnel", "eval_funnel", "feedforward_policy",
    "guidance_control", "input_energy", "load_funnel", "load_scenario", "mirror_funnel",
    "plan_is_feasible", "rollout_traces", "save_funnel", "saturate", "simulate",
    "simulate_batch", "waypoint_feedforward",
]
