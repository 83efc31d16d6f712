"""STL formula grammar, parser, printer and structural queries"""

from robustlab.formula.ast import (
    Add, Always, And, Channel, Const, Eventually, Expr, Formula, Norm, Not, Or, Predicate,
    PredicateExpr, Scale, Sub, TrueF, Until, always, channels, conj, disj, eventually,
    formula_horizon, normalize, subformulas, until,
)
from robustlab.formula.grammar import parse_formula
from robustlab.formula.printer import format_expr, format_formula, format_number

__all__ = [
    "Add", "Always", "And", "Channel", "Const", "Eventually", "Expr", "Formula", "Norm",
    "Not", "Or", "Predicate", "PredicateExpr", "Scale", "Sub", "TrueF", "Until",
    "always", "channels", "conj", "disj", "eventually", "formula_horizon", "normalize",
    "subformulas", "until", "parse_formula", "format_expr", "format_formula",
    "format_number",
]
