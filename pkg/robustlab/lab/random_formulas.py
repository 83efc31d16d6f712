"""Seeded generators of random formulas and smooth traces"""

from typing import Sequence

import numpy as np

from robustlab.formula.ast import (
    Channel, Const, Formula, Norm, Not, Predicate, Sub, TrueF, always, conj, disj,
    eventually, until,
)
from robustlab.signals.trace import Trace

OPERATORS = ("not", "and", "or", "eventually", "always", "until")


def _constant(rng: np.random.Generator, low: float, high: float) -> Const:
    return Const(round(float(rng.uniform(low, high)), 3))


def random_predicate(rng: np.random.Generator, channels: Sequence[str]) -> Predicate:
    kind = int(rng.integers(3))
    name = Channel(str(rng.choice(list(channels))))
    if kind == 0:
        return Predicate(Sub(name, _constant(rng, -1.0, 1.0)))
    if kind == 1:
        return Predicate(Sub(_constant(rng, -1.0, 1.0), name))
    offsets = tuple(Sub(Channel(c), _constant(rng, -1.0, 1.0)) for c in channels)
    return Predicate(Sub(_constant(rng, 0.2, 1.5), Norm(offsets)))


def _interval(rng: np.random.Generator, dt: float, max_window: int):
    start = int(rng.integers(0, max_window // 2 + 1))
    stop = start + int(rng.integers(0, max_window // 2 + 1))
    return start * dt, stop * dt


def random_formula(rng: np.random.Generator, depth: int = 4, channels: Sequence[str] = ("x", "y"),
                   dt: float = 0.05, max_window: int = 8, allow_true: bool = False) -> Formula:
    """Normalized formula of at most `depth` levels with intervals on the dt grid"""
    if depth <= 1 or rng.random() < 0.25:
        if allow_true and rng.random() < 0.1:
            return TrueF()
        return random_predicate(rng, channels)

    op = OPERATORS[int(rng.integers(len(OPERATORS)))]

    def sub() -> Formula:
        return random_formula(rng, depth - 1, channels, dt, max_window, allow_true)

    if op == "not":
        return Not(sub())
    if op in ("and", "or"):
        parts = [sub() for _ in range(int(rng.integers(2, 4)))]
        return conj(*parts) if op == "and" else disj(*parts)
    a, b = _interval(rng, dt, max_window)
    if op == "eventually":
        return eventually(a, b, sub())
    if op == "always":
        return always(a, b, sub())
    return until(a, b, sub(), sub())


def random_trace(rng: np.random.Generator, length: int = 200, channels: Sequence[str] = ("x", "y"),
                 dt: float = 0.05) -> Trace:
    """Sum of a few random sinusoids per channel"""
    t = dt * np.arange(length)
    columns = []
    for _ in channels:
        value = np.full(length, rng.uniform(-0.5, 0.5))
        for _ in range(3):
            value += rng.uniform(0.1, 1.0) * np.sin(rng.uniform(0.2, 3.0) * t + rng.uniform(0, 2 * np.pi))
        columns.append(value)
    return Trace(t0=0.0, dt=dt, channels=tuple(channels), samples=np.column_stack(columns))
