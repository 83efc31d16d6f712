"""Funnel-tracking guidance law used to steer exploration

Each guide (gamma_i, goal_i) pushes toward the goal's center with gain
kappa * max(0, gamma_i(t) + delta - rho_i(x)), so a guide is silent while its
funnel is satisfied with margin delta. The sum is saturated to u_max.
"""

from typing import Sequence, Tuple

import numpy as np

from robustlab.control.funnels import Funnel
from robustlab.control.scenario import GoalRegion

KAPPA = 2.0
DELTA = 0.05

Guide = Tuple[Funnel, GoalRegion]


def saturate(u: np.ndarray, u_max: float) -> np.ndarray:
    """Scale each row (or the vector) down to norm <= u_max"""
    u = np.asarray(u, dtype=float)
    norms = np.linalg.norm(u, axis=-1, keepdims=True)
    scale = np.minimum(1.0, u_max / np.maximum(norms, np.finfo(float).tiny))
    return u * scale


def guide_arrays(guides: Sequence[Guide]) -> Tuple[np.ndarray, np.ndarray]:
    centers = np.array([g.center for _, g in guides], dtype=float).reshape(-1, 2)
    radii = np.array([g.radius for _, g in guides], dtype=float)
    return centers, radii


def guidance_terms(x: np.ndarray, gammas: np.ndarray, centers: np.ndarray, radii: np.ndarray,
                   kappa: float = KAPPA, delta: float = DELTA) -> np.ndarray:
    """Unsaturated guidance for a batch of states x (B, 2) given gamma_i(t) (G,)"""
    diff = centers[np.newaxis, :, :] - x[:, np.newaxis, :]
    dist = np.linalg.norm(diff, axis=2)
    rho = radii[np.newaxis, :] - dist
    gain = kappa * np.maximum(0.0, gammas[np.newaxis, :] + delta - rho)
    # zero ascent direction at a goal's center
    safe = np.where(dist > 0, dist, 1.0)
    direction = np.where(dist[..., np.newaxis] > 0, diff / safe[..., np.newaxis], 0.0)
    return np.sum(gain[..., np.newaxis] * direction, axis=1)


def guidance_control(x, t: float, funnels: Sequence[Guide], kappa: float = KAPPA,
                     delta: float = DELTA, u_max: float = 1.0) -> np.ndarray:
    """Saturated guidance input at state x and time t"""
    x = np.asarray(x, dtype=float).reshape(1, 2)
    if not funnels:
        return np.zeros(2)
    centers, radii = guide_arrays(funnels)
    gammas = np.array([funnel(t) for funnel, _ in funnels])
    return saturate(guidance_terms(x, gammas, centers, radii, kappa, delta)[0], u_max)
