"""STL formula and predicate-expression syntax trees

All nodes are frozen dataclasses, so structural equality and hashing come for free
and values can be shared between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple, Union

from robustlab.core.exceptions import IntervalError


# Predicate expressions (the h function of a predicate)

@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Channel:
    name: str


@dataclass(frozen=True)
class Add:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Sub:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Scale:
    """Multiplication of a sub-expression by a constant factor"""
    factor: float
    expr: "Expr"


@dataclass(frozen=True)
class Norm:
    """Euclidean norm of a vector of sub-expressions"""
    args: Tuple["Expr", ...]


Expr = Union[Const, Channel, Add, Sub, Scale, Norm]
PredicateExpr = Expr


def expr_channels(expr: Expr) -> Set[str]:
    if isinstance(expr, Channel):
        return {expr.name}
    if isinstance(expr, (Add, Sub)):
        return expr_channels(expr.lhs) | expr_channels(expr.rhs)
    if isinstance(expr, Scale):
        return expr_channels(expr.expr)
    if isinstance(expr, Norm):
        names: Set[str] = set()
        for arg in expr.args:
            names |= expr_channels(arg)
        return names
    return set()


# Formulas

def _check_interval(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b)):
        raise IntervalError(f"Interval bounds must be finite, got [{a}, {b}]")
    if a < 0 or b < 0:
        raise IntervalError(f"Interval bounds must be non-negative, got [{a}, {b}]")
    if a > b:
        raise IntervalError(f"Interval lower bound exceeds upper bound: [{a}, {b}]")


@dataclass(frozen=True)
class TrueF:
    pass


@dataclass(frozen=True)
class Predicate:
    """Holds when expr >= 0"""
    expr: Expr


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    children: Tuple["Formula", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("And needs at least two operands")


@dataclass(frozen=True)
class Or:
    children: Tuple["Formula", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Or needs at least two operands")


@dataclass(frozen=True)
class Eventually:
    a: float
    b: float
    child: "Formula"

    def __post_init__(self):
        _check_interval(self.a, self.b)


@dataclass(frozen=True)
class Always:
    a: float
    b: float
    child: "Formula"

    def __post_init__(self):
        _check_interval(self.a, self.b)


@dataclass(frozen=True)
class Until:
    a: float
    b: float
    lhs: "Formula"
    rhs: "Formula"

    def __post_init__(self):
        _check_interval(self.a, self.b)


Formula = Union[TrueF, Predicate, Not, And, Or, Eventually, Always, Until]
Path = Tuple[int, ...]


def normalize(f: Formula) -> Formula:
    """Flatten And-inside-And and Or-inside-Or into single n-ary nodes

    The conjunction operators are not associative, so a flat operand list is the
    canonical form; normalizing twice is the same as normalizing once.
    """
    if isinstance(f, (And, Or)):
        kind = type(f)
        flat: List[Formula] = []
        for child in f.children:
            child = normalize(child)
            if isinstance(child, kind):
                flat.extend(child.children)
            else:
                flat.append(child)
        return kind(tuple(flat))
    if isinstance(f, Not):
        return Not(normalize(f.child))
    if isinstance(f, Eventually):
        return Eventually(f.a, f.b, normalize(f.child))
    if isinstance(f, Always):
        return Always(f.a, f.b, normalize(f.child))
    if isinstance(f, Until):
        return Until(f.a, f.b, normalize(f.lhs), normalize(f.rhs))
    return f


def conj(*fs: Formula) -> Formula:
    return normalize(And(tuple(fs)))


def disj(*fs: Formula) -> Formula:
    return normalize(Or(tuple(fs)))


def always(a: float, b: float, f: Formula) -> Formula:
    return normalize(Always(float(a), float(b), f))


def eventually(a: float, b: float, f: Formula) -> Formula:
    return normalize(Eventually(float(a), float(b), f))


def until(a: float, b: float, lhs: Formula, rhs: Formula) -> Formula:
    return normalize(Until(float(a), float(b), lhs, rhs))


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, (And, Or)):
        return f.children
    if isinstance(f, (Not, Eventually, Always)):
        return (f.child,)
    if isinstance(f, Until):
        return (f.lhs, f.rhs)
    return ()


def subformulas(f: Formula, path: Path = ()) -> Iterator[Tuple[Path, Formula]]:
    """Pre-order walk yielding (path, node); the root has the empty path"""
    yield path, f
    for i, child in enumerate(children(f)):
        yield from subformulas(child, path + (i,))


def channels(f: Formula) -> Set[str]:
    names: Set[str] = set()
    for _, node in subformulas(f):
        if isinstance(node, Predicate):
            names |= expr_channels(node.expr)
    return names


def formula_horizon(f: Formula) -> float:
    """Duration H such that evaluating f at t only reads the trace on [t, t+H]"""
    if isinstance(f, (TrueF, Predicate)):
        return 0.0
    if isinstance(f, Not):
        return formula_horizon(f.child)
    if isinstance(f, (And, Or)):
        return max(formula_horizon(c) for c in f.children)
    if isinstance(f, (Eventually, Always)):
        return f.b + formula_horizon(f.child)
    if isinstance(f, Until):
        return f.b + max(formula_horizon(f.lhs), formula_horizon(f.rhs))
    raise TypeError(f"Not a formula node: {f!r}")
