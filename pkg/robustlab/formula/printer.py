"""Canonical text for formulas; parse_formula(format_formula(f)) == f for normalized f"""

from robustlab.formula.ast import (
    Add, Always, And, Channel, Const, Eventually, Expr, Formula, Norm, Not, Or, Predicate,
    Scale, Sub, TrueF, Until,
)


def format_number(value: float) -> str:
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Const):
        return format_number(expr.value)
    if isinstance(expr, Channel):
        return expr.name
    if isinstance(expr, Add):
        return f"({format_expr(expr.lhs)} + {format_expr(expr.rhs)})"
    if isinstance(expr, Sub):
        return f"({format_expr(expr.lhs)} - {format_expr(expr.rhs)})"
    if isinstance(expr, Scale):
        return f"({format_number(expr.factor)} * {format_expr(expr.expr)})"
    if isinstance(expr, Norm):
        return "norm(" + ", ".join(format_expr(a) for a in expr.args) + ")"
    raise TypeError(f"Not an expression node: {expr!r}")


def _interval(a: float, b: float) -> str:
    return f"[{format_number(a)},{format_number(b)}]"


def format_formula(f: Formula) -> str:
    """Print without rewriting; every compound node is parenthesized"""
    if isinstance(f, TrueF):
        return "true"
    if isinstance(f, Predicate):
        return format_expr(f.expr)
    if isinstance(f, Not):
        return f"!({format_formula(f.child)})"
    if isinstance(f, And):
        return "(" + " & ".join(format_formula(c) for c in f.children) + ")"
    if isinstance(f, Or):
        return "(" + " | ".join(format_formula(c) for c in f.children) + ")"
    if isinstance(f, Eventually):
        return f"F{_interval(f.a, f.b)}({format_formula(f.child)})"
    if isinstance(f, Always):
        return f"G{_interval(f.a, f.b)}({format_formula(f.child)})"
    if isinstance(f, Until):
        return f"({format_formula(f.lhs)} U{_interval(f.a, f.b)} {format_formula(f.rhs)})"
    raise TypeError(f"Not a formula node: {f!r}")
