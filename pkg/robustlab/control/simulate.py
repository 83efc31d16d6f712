"""Explicit-Euler rollouts of the single integrator under guidance plus feedforward"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from robustlab.control.guidance import DELTA, KAPPA, Guide, guidance_terms, guide_arrays, saturate
from robustlab.control.scenario import RobotSpec
from robustlab.core.exceptions import DivergenceError, UnknownChannelError
from robustlab.signals.trace import Trace

logger = logging.getLogger(__name__)

STATE_CHANNELS = ("x1", "x2")
INPUT_CHANNELS = ("u1", "u2")
TRACE_CHANNELS = STATE_CHANNELS + INPUT_CHANNELS
FEASIBILITY_SLACK = 1e-12

Policy = Callable[[np.ndarray, float], np.ndarray]
Waypoint = Tuple[float, Tuple[float, float]]


def feedforward_policy(theta: np.ndarray, dt: float) -> Policy:
    """k_theta(t) = theta[k] on [k dt, (k+1) dt); the last row holds past the end"""
    theta = np.asarray(theta, dtype=float)
    last = theta.shape[0] - 1

    def policy(x: np.ndarray, t: float) -> np.ndarray:
        k = min(int(np.floor(t / dt + 1e-9)), last)
        return theta[max(k, 0)]

    return policy


def _to_trace(spec: RobotSpec, states: np.ndarray, inputs: np.ndarray) -> Trace:
    return Trace(t0=0.0, dt=spec.dt, channels=TRACE_CHANNELS,
                 samples=np.column_stack([states, inputs]))


def simulate(spec: RobotSpec, policy: Optional[Policy] = None, funnels: Sequence[Guide] = (),
             kappa: float = KAPPA, delta: float = DELTA) -> Trace:
    """x_{k+1} = x_k + dt * sat(u_guide(x_k, t_k) + policy(x_k, t_k))

    Returns channels x1, x2, u1, u2 with T/dt + 1 samples; the input at the final
    sample is the control that would be applied at T.
    """
    n = spec.steps + 1
    states = np.empty((n, 2))
    inputs = np.empty((n, 2))
    x = np.array(spec.x0, dtype=float)
    centers, radii = guide_arrays(funnels) if funnels else (None, None)
    gamma_table = (np.stack([f.values(spec.times) for f, _ in funnels], axis=1)
                   if funnels else None)

    for k in range(n):
        t = k * spec.dt
        u = np.zeros(2)
        if funnels:
            u = u + guidance_terms(x[np.newaxis, :], gamma_table[k], centers, radii, kappa, delta)[0]
        if policy is not None:
            u = u + np.asarray(policy(x, t), dtype=float)
        u = saturate(u, spec.u_max)
        states[k] = x
        inputs[k] = u
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(u))):
            raise DivergenceError(f"Non-finite state or input at t={t}")
        x = x + spec.dt * u

    return _to_trace(spec, states, inputs)


def simulate_batch(spec: RobotSpec, thetas: np.ndarray, funnels: Sequence[Guide] = (),
                   kappa: float = KAPPA, delta: float = DELTA) -> Tuple[np.ndarray, np.ndarray]:
    """Rollouts of B feedforward parameter sets at once

    thetas has shape (B, steps, 2). Returns states and inputs, each (B, steps + 1, 2).
    """
    thetas = np.asarray(thetas, dtype=float)
    batch, steps = thetas.shape[0], spec.steps
    if thetas.shape[1:] != (steps, 2):
        raise ValueError(f"Expected parameters of shape (B, {steps}, 2), got {thetas.shape}")

    states = np.empty((batch, steps + 1, 2))
    inputs = np.empty((batch, steps + 1, 2))
    x = np.tile(np.array(spec.x0, dtype=float), (batch, 1))
    if funnels:
        centers, radii = guide_arrays(funnels)
        gamma_table = np.stack([f.values(spec.times) for f, _ in funnels], axis=1)

    for k in range(steps + 1):
        u = thetas[:, min(k, steps - 1), :].copy()
        if funnels:
            u += guidance_terms(x, gamma_table[k], centers, radii, kappa, delta)
        u = saturate(u, spec.u_max)
        states[:, k] = x
        inputs[:, k] = u
        x = x + spec.dt * u

    if not (np.all(np.isfinite(states)) and np.all(np.isfinite(inputs))):
        raise DivergenceError("Non-finite state or input in batch rollout")
    return states, inputs


def rollout_traces(spec: RobotSpec, thetas: np.ndarray, funnels: Sequence[Guide] = (),
                   kappa: float = KAPPA, delta: float = DELTA) -> List[Trace]:
    states, inputs = simulate_batch(spec, thetas, funnels, kappa, delta)
    return [_to_trace(spec, s, u) for s, u in zip(states, inputs)]


def input_energy(trace: Trace) -> float:
    """Left Riemann sum of |u|^2 dt over the N-1 applied inputs"""
    if not trace.has_channels(INPUT_CHANNELS):
        raise UnknownChannelError(f"Trace has no input channels {', '.join(INPUT_CHANNELS)}")
    u = np.column_stack([trace.column(c) for c in INPUT_CHANNELS])[:-1]
    return float(np.sum(u * u) * trace.dt)


def waypoint_feedforward(waypoints: Sequence[Waypoint], spec: RobotSpec) -> np.ndarray:
    """Per-step velocities of a piecewise constant-velocity plan

    Waypoints are (time, point) pairs sorted by time, starting at t = 0. Steps
    after the last waypoint get zero velocity.
    """
    theta = np.zeros((spec.steps, 2))
    times = spec.dt * np.arange(spec.steps)
    eps = spec.dt * 1e-6
    for (ta, pa), (tb, pb) in zip(waypoints, waypoints[1:]):
        if tb <= ta:
            raise ValueError("waypoint times must be strictly increasing")
        velocity = (np.asarray(pb, dtype=float) - np.asarray(pa, dtype=float)) / (tb - ta)
        mask = (times >= ta - eps) & (times < tb - eps)
        theta[mask] = velocity
    return theta


def plan_is_feasible(waypoints: Sequence[Waypoint], u_max: float) -> bool:
    """Every segment's constant speed is within u_max"""
    for (ta, pa), (tb, pb) in zip(waypoints, waypoints[1:]):
        distance = float(np.linalg.norm(np.asarray(pb, dtype=float) - np.asarray(pa, dtype=float)))
        if distance > u_max * (tb - ta) + FEASIBILITY_SLACK:
            return False
    return True
