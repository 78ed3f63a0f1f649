"""Evaluate parsed expressions to canonical external numbers."""

from __future__ import annotations

from .external import (
    MAX_MAGNITUDE,
    ExternalNumber,
    as_element,
    en_abs,
    en_add,
    en_inv,
    en_mul,
    en_neg,
    en_pow,
    magnitude_element,
    magnitude_of,
    precise,
    rel_uncertainty,
    unity_of,
)
from .laurent import LaurentPoly
from .parser import BinOp, Eps, Expr, Fn, Lit, Mag, MagMax, Neg, Pow

_EPS = precise(LaurentPoly.eps())


def eval_expr(node: Expr) -> ExternalNumber:
    if isinstance(node, Lit):
        return precise(node.value)
    if isinstance(node, Eps):
        return _EPS
    if isinstance(node, Mag):
        return magnitude_element(node.index)
    if isinstance(node, MagMax):
        return MAX_MAGNITUDE
    if isinstance(node, Neg):
        return en_neg(eval_expr(node.arg))
    if isinstance(node, Pow):
        return en_pow(eval_expr(node.base), node.exponent)
    if isinstance(node, BinOp):
        left = eval_expr(node.left)
        right = eval_expr(node.right)
        if node.op == "+":
            return en_add(left, right)
        if node.op == "-":
            return en_add(left, en_neg(right))
        if node.op == "*":
            return en_mul(left, right)
        return en_mul(left, en_inv(right))  # x/y is x * inv(y)
    if isinstance(node, Fn):
        arg = eval_expr(node.arg)
        if node.name == "e":
            return as_element(magnitude_of(arg))
        if node.name == "u":
            return unity_of(arg)
        if node.name == "inv":
            return en_inv(arg)
        if node.name == "abs":
            return en_abs(arg)
        return as_element(rel_uncertainty(arg))  # R
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(source: str) -> ExternalNumber:
    """Parse and evaluate in one step."""
    from .parser import parse_expr

    return eval_expr(parse_expr(source))
