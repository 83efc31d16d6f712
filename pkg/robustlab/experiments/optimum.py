"""Closed-form optimum of the two-goal case study

The cheapest satisfying plan moves at constant velocity between the points of
the two margin-shrunk goal discs that face each other, visiting g1 at 2 s and
6 s and g2 at 4 s and 8 s. A constant-velocity segment of length d over time dt
costs d^2 / dt.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from robustlab.control.scenario import GoalRegion, RobotSpec, Scenario
from robustlab.control.simulate import Waypoint, plan_is_feasible

VISIT_TIMES = (2.0, 4.0, 6.0, 8.0)
MARGIN = 0.05


@dataclass(frozen=True)
class OptimalPlan:
    waypoints: Tuple[Waypoint, ...]
    start_distance: float
    goal_distance: float
    cost: float
    feasible: bool

    def describe(self) -> str:
        stops = ", ".join(f"({p[0]:.4f}, {p[1]:.4f}) @ {t:g}s" for t, p in self.waypoints)
        return (f"constant-velocity plan {stops}; start leg {self.start_distance:.4f} m, "
                f"goal-to-goal {self.goal_distance:.4f} m, cost {self.cost:.4f}")


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    return v / norm if norm > 0 else np.zeros_like(v)


def plan_cost(waypoints: Sequence[Waypoint]) -> float:
    """Energy of a constant-velocity plan: sum of d_i^2 / dt_i"""
    total = 0.0
    for (ta, pa), (tb, pb) in zip(waypoints, waypoints[1:]):
        d = float(np.linalg.norm(np.subtract(pb, pa)))
        total += d * d / (tb - ta)
    return total


def facing_points(g1: GoalRegion, g2: GoalRegion, margin: float = MARGIN) -> Tuple[np.ndarray, np.ndarray]:
    """Points of each disc, shrunk by margin, closest to the other disc"""
    c1, c2 = np.asarray(g1.center, dtype=float), np.asarray(g2.center, dtype=float)
    p1 = c1 + (g1.radius - margin) * _unit(c2 - c1)
    p2 = c2 + (g2.radius - margin) * _unit(c1 - c2)
    return p1, p2


def analytic_optimum(scenario: Optional[Scenario] = None, margin: float = MARGIN,
                     visit_times: Sequence[float] = VISIT_TIMES) -> OptimalPlan:
    """Optimal plan and its cost for the case-study geometry (defaults: x0 = (2, 2),
    goals (1.5, 2.5) and (2.5, 1.5) with radius 0.2, T = 10 s)"""
    if scenario is None:
        robot = RobotSpec()
        g1 = GoalRegion(name="g1", center=(1.5, 2.5), radius=0.2)
        g2 = GoalRegion(name="g2", center=(2.5, 1.5), radius=0.2)
    else:
        robot = scenario.robot
        g1, g2 = scenario.goals

    x0 = np.asarray(robot.x0, dtype=float)
    p1, p2 = facing_points(g1, g2, margin)
    # first visit: closest shrunk-disc point of g1 as seen from the start
    c1 = np.asarray(g1.center, dtype=float)
    entry = c1 + (g1.radius - margin) * _unit(x0 - c1)

    points: List[np.ndarray] = [entry]
    for i in range(1, len(visit_times)):
        points.append(p2 if i % 2 else p1)

    waypoints: List[Waypoint] = [(0.0, tuple(x0))]
    waypoints += [(float(t), tuple(p)) for t, p in zip(visit_times, points)]
    if robot.T > visit_times[-1]:
        waypoints.append((float(robot.T), tuple(points[-1])))

    return OptimalPlan(
        waypoints=tuple(waypoints),
        start_distance=float(np.linalg.norm(entry - x0)),
        goal_distance=float(np.linalg.norm(p2 - p1)),
        cost=plan_cost(waypoints),
        feasible=plan_is_feasible(waypoints, robot.u_max),
    )
