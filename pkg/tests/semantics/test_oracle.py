"""Vectorized engine against a direct recursive evaluation at single indices"""

import numpy as np
import pytest

from robustlab.formula import Always, And, Eventually, Not, Or, Predicate, TrueF, Until
from robustlab.lab import random_formula, random_trace
from robustlab.metrics import TRUE_ROBUSTNESS
from robustlab.semantics import robustness_signal, satisfaction_signal
from robustlab.signals import predicate_signal, window_offsets


def naive_rho(metric, f, trace, k):
    if isinstance(f, TrueF):
        return TRUE_ROBUSTNESS
    if isinstance(f, Predicate):
        return float(predicate_signal(trace, f.expr)[k])
    if isinstance(f, Not):
        return -naive_rho(metric, f.child, trace, k)
    if isinstance(f, And):
        return metric.and_n([naive_rho(metric, c, trace, k) for c in f.children])
    if isinstance(f, Or):
        return metric.or_n([naive_rho(metric, c, trace, k) for c in f.children])
    lo, hi = window_offsets(trace.dt, f.a, f.b)
    if isinstance(f, Always):
        return metric.and_n([naive_rho(metric, f.child, trace, k + j) for j in range(lo, hi + 1)])
    if isinstance(f, Eventually):
        return metric.or_n([naive_rho(metric, f.child, trace, k + j) for j in range(lo, hi + 1)])
    assert isinstance(f, Until)
    terms = []
    for j in range(lo, hi + 1):
        held = metric.and_n([naive_rho(metric, f.lhs, trace, k + i) for i in range(j + 1)])
        terms.append(metric.and_n([naive_rho(metric, f.rhs, trace, k + j), held]))
    return metric.or_n(terms)


def naive_sat(f, trace, k):
    if isinstance(f, TrueF):
        return True
    if isinstance(f, Predicate):
        return bool(predicate_signal(trace, f.expr)[k] >= 0)
    if isinstance(f, Not):
        return not naive_sat(f.child, trace, k)
    if isinstance(f, And):
        return all(naive_sat(c, trace, k) for c in f.children)
    if isinstance(f, Or):
        return any(naive_sat(c, trace, k) for c in f.children)
    lo, hi = window_offsets(trace.dt, f.a, f.b)
    if isinstance(f, Always):
        return all(naive_sat(f.child, trace, k + j) for j in range(lo, hi + 1))
    if isinstance(f, Eventually):
        return any(naive_sat(f.child, trace, k + j) for j in range(lo, hi + 1))
    return any(naive_sat(f.rhs, trace, k + j) and all(naive_sat(f.lhs, trace, k + i) for i in range(j + 1))
               for j in range(lo, hi + 1))


@pytest.mark.parametrize("seed", range(12))
def test_engine_matches_recursion(any_metric, seed):
    """Test: Robustness signal equals per-index recursion on random formulas"""
    rng = np.random.default_rng(seed)
    formula = random_formula(rng, depth=3, max_window=6)
    trace = random_trace(rng, length=60)
    rho = robustness_signal(any_metric, formula, trace)
    for k in sorted({0, rho.shape[0] // 2, rho.shape[0] - 1}):
        assert rho[k] == pytest.approx(naive_rho(any_metric, formula, trace, k), rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("seed", range(12))
def test_boolean_matches_recursion(seed):
    """Test: Satisfaction signal equals per-index recursion"""
    rng = np.random.default_rng(100 + seed)
    formula = random_formula(rng, depth=3, max_window=6, allow_true=True)
    trace = random_trace(rng, length=60)
    sat = satisfaction_signal(formula, trace)
    for k in sorted({0, sat.shape[0] // 2, sat.shape[0] - 1}):
        assert bool(sat[k]) == naive_sat(formula, trace, k)


def min_max_rho(f, trace, k, memo):
    """Plain min/max recursion; memo maps (subformula, index) to robustness"""
    key = (f, k)
    if key in memo:
        return memo[key]
    if isinstance(f, TrueF):
        value = TRUE_ROBUSTNESS
    elif isinstance(f, Predicate):
        value = float(predicate_signal(trace, f.expr)[k])
    elif isinstance(f, Not):
        value = -min_max_rho(f.child, trace, k, memo)
    elif isinstance(f, And):
        value = min(min_max_rho(c, trace, k, memo) for c in f.children)
    elif isinstance(f, Or):
        value = max(min_max_rho(c, trace, k, memo) for c in f.children)
    else:
        lo, hi = window_offsets(trace.dt, f.a, f.b)
        if isinstance(f, Always):
            value = min(min_max_rho(f.child, trace, k + j, memo) for j in range(lo, hi + 1))
        elif isinstance(f, Eventually):
            value = max(min_max_rho(f.child, trace, k + j, memo) for j in range(lo, hi + 1))
        else:
            value = max(
                min(min_max_rho(f.rhs, trace, k + j, memo),
                    min(min_max_rho(f.lhs, trace, k + i, memo) for i in range(j + 1)))
                for j in range(lo, hi + 1)
            )
    memo[key] = value
    return value


def test_traditional_matches_min_max(traditional):
    """Test: Traditional robustness equals plain min/max semantics on 500 random pairs"""
    rng = np.random.default_rng(42)
    for _ in range(500):
        formula = random_formula(rng, depth=4, allow_true=True)
        trace = random_trace(rng, length=int(rng.integers(60, 121)))
        rho = robustness_signal(traditional, formula, trace)
        memo = {}
        for k in sorted({0, rho.shape[0] // 2, rho.shape[0] - 1}):
            assert abs(rho[k] - min_max_rho(formula, trace, k, memo)) <= 1e-12, formula
