"""Exact arithmetic on external numbers.

An external number is a scalar representative together with an order of
magnitude that blurs it: ``a + M_k``.  The package provides the exact
scalar layer (rationals, Laurent polynomials, rational functions), the
arithmetic and total order of external numbers, decision procedures for
the distributive law, a randomized conformance suite for the governing
axioms, and a small expression CLI.
"""

from .external import (
    MAX_MAGNITUDE,
    ONE,
    ZERO,
    ExternalNumber,
    NotZerolessError,
    SignClass,
    as_element,
    canonicalize,
    classify,
    decompose,
    en_abs,
    en_add,
    en_compare,
    en_inv,
    en_le,
    en_lt,
    en_mul,
    en_neg,
    en_pow,
    magnitude_element,
    magnitude_of,
    precise,
    rel_uncertainty,
    unity_of,
)
from .fmt import print_canonical
from .laurent import (
    LaurentPoly,
    leading_coeff,
    poly_add,
    poly_mul,
    series_invert,
    truncate_below,
    valuation,
)
from .laws import (
    DistBranch,
    DistReport,
    ModelViolationError,
    axiom22_residual,
    dist_decide,
    dist_special_cases,
    subdist_check,
)
from .magnitude import INF, MAX_MAG, NEG_INF, ZERO_MAG, MagIndex, Magnitude
from .parser import ParseError, parse_expr
from .evaluator import eval_expr, evaluate
from .ratfun import (
    RatFun,
    ratfun,
    ratfun_arith,
    ratfun_expand_below,
    ratfun_from_laurent,
    ratfun_from_rational,
    ratfun_sign,
    ratfun_valuation,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "MAX_MAG",
    "MAX_MAGNITUDE",
    "NEG_INF",
    "ONE",
    "ZERO",
    "ZERO_MAG",
    "DistBranch",
    "DistReport",
    "ExternalNumber",
    "LaurentPoly",
    "MagIndex",
    "Magnitude",
    "ModelViolationError",
    "NotZerolessError",
    "ParseError",
    "RatFun",
    "SignClass",
    "as_element",
    "axiom22_residual",
    "canonicalize",
    "classify",
    "decompose",
    "dist_decide",
    "dist_special_cases",
    "en_abs",
    "en_add",
    "en_compare",
    "en_inv",
    "en_le",
    "en_lt",
    "en_mul",
    "en_neg",
    "en_pow",
    "eval_expr",
    "evaluate",
    "leading_coeff",
    "magnitude_element",
    "magnitude_of",
    "parse_expr",
    "poly_add",
    "poly_mul",
    "precise",
    "print_canonical",
    "ratfun",
    "ratfun_arith",
    "ratfun_expand_below",
    "ratfun_from_laurent",
    "ratfun_from_rational",
    "ratfun_sign",
    "ratfun_valuation",
    "rel_uncertainty",
    "series_invert",
    "subdist_check",
    "truncate_below",
    "unity_of",
    "valuation",
]
