"""Concrete syntax for STL formulas, parsed with lark

    G[a,b] phi      always          F[a,b] phi      eventually
    phi U[a,b] psi  until           !phi            negation
    phi & psi & ... conjunction     phi | psi | ... disjunction
    expr >= expr    predicate (a bare expr means expr >= 0)

Mixing '&' and '|' at one level needs parentheses. Predicate expressions use
+, -, * (one side constant), norm(e1, e2, ...), channel names and decimal literals.
"""

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from robustlab.core.exceptions import FormulaSyntaxError, UnknownFunctionError
from robustlab.formula.ast import (
    Add, Always, And, Channel, Const, Eventually, Formula, Norm, Not, Or, Predicate,
    Scale, Sub, TrueF, Until, normalize,
)

STL_GRAMMAR = r'''
?start: formula

?formula: chain
    | and_chain
    | or_chain

and_chain: chain ("&" chain)+
or_chain: chain ("|" chain)+

?chain: unary
    | unary "U" interval unary          -> until

?unary: "!" unary                       -> negation
    | "G" interval unary                -> always
    | "F" interval unary                -> eventually
    | atom

?atom: "(" formula ")"
    | "true"                            -> true_
    | predicate

predicate: expr (">=" expr)?

interval: "[" SIGNED_NUMBER "," SIGNED_NUMBER "]"

?expr: term
    | expr "+" term                     -> add
    | expr "-" term                     -> sub

?term: factor
    | term "*" factor                   -> mul

?factor: "-" factor                     -> neg
    | NUMBER                            -> number
    | IDENT "(" expr ("," expr)* ")"    -> call
    | IDENT                             -> channel
    | "(" expr ")"

IDENT: /(?!(true|G|F|U)\b)[A-Za-z_][A-Za-z0-9_]*/
NUMBER: /(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?/
SIGNED_NUMBER: /-?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?/

%import common.WS
%ignore WS
'''

FUNCTIONS = {"norm"}


@v_args(inline=True)
class FormulaTransformer(Transformer):
    """Turn the lark parse tree into Formula / Expr nodes"""

    def and_chain(self, *items):
        return And(tuple(items))

    def or_chain(self, *items):
        return Or(tuple(items))

    def until(self, lhs, interval, rhs):
        a, b = interval
        return Until(a, b, lhs, rhs)

    def negation(self, child):
        return Not(child)

    def always(self, interval, child):
        a, b = interval
        return Always(a, b, child)

    def eventually(self, interval, child):
        a, b = interval
        return Eventually(a, b, child)

    def true_(self):
        return TrueF()

    def predicate(self, lhs, rhs=None):
        if rhs is None:
            return Predicate(lhs)
        return Predicate(Sub(lhs, rhs))

    def interval(self, a, b):
        return float(a), float(b)

    def add(self, lhs, rhs):
        return Add(lhs, rhs)

    def sub(self, lhs, rhs):
        return Sub(lhs, rhs)

    def mul(self, lhs, rhs):
        if isinstance(lhs, Const):
            return Scale(lhs.value, rhs)
        if isinstance(rhs, Const):
            return Scale(rhs.value, lhs)
        raise FormulaSyntaxError("Multiplication needs a constant operand")

    def neg(self, operand):
        if isinstance(operand, Const):
            return Const(-operand.value)
        return Scale(-1.0, operand)

    def number(self, token):
        return Const(float(token))

    def channel(self, token):
        return Channel(str(token))

    def call(self, name, *args):
        if str(name) not in FUNCTIONS:
            raise UnknownFunctionError(f"Unknown function '{name}'")
        return Norm(tuple(args))


_parser = None


def _get_parser() -> Lark:
    global _parser
    if _parser is None:
        _parser = Lark(STL_GRAMMAR, parser="earley", start="start")
    return _parser


def parse_formula(text: str) -> Formula:
    """Parse formula text into a normalized AST

    Raises FormulaSyntaxError (with position), IntervalError or UnknownFunctionError.
    """
    try:
        tree = _get_parser().parse(text)
    except UnexpectedEOF as e:
        raise FormulaSyntaxError("Unexpected end of formula", position=len(text)) from e
    except UnexpectedInput as e:
        raise FormulaSyntaxError(
            "Unexpected input",
            position=getattr(e, "pos_in_stream", None),
            line=getattr(e, "line", None),
            column=getattr(e, "column", None),
        ) from e

    try:
        result = FormulaTransformer().transform(tree)
    except VisitError as e:
        raise e.orig_exc from None
    return normalize(result)
