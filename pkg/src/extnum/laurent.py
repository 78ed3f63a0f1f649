"""Finitely supported Laurent polynomials in one infinitesimal generator.

Coefficients are exact rationals (``int`` or ``fractions.Fraction``; the
two compare and hash identically, so integral values are kept as plain
ints).  The zero polynomial has an empty term map.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .magnitude import INF, NEG_INF, MagIndex

Coeff = Union[int, Fraction]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Immutable map exponent -> nonzero rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Coeff] = ()):
        cleaned: Dict[int, Coeff] = {}
        for e, c in dict(terms).items():
            if c:
                cleaned[e] = _norm_coeff(c)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def _trusted(cls, terms: Dict[int, Coeff]) -> "LaurentPoly":
        # terms must already be free of zero coefficients
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def constant(cls, q: Coeff) -> "LaurentPoly":
        return cls({0: q})

    @classmethod
    def eps(cls, n: int = 1, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({n: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterable[Tuple[int, Coeff]]:
        return sorted(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return poly_add(self, other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return poly_add(self, -other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return poly_mul(self, other)

    def shifted(self, delta: int) -> "LaurentPoly":
        """Multiply by eps**delta, i.e. shift every exponent by delta."""
        return LaurentPoly._trusted({e + delta: c for e, c in self.terms.items()})

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        body = " + ".join(f"{c}*eps^{e}" for e, c in self.items())
        return f"LaurentPoly({body})"


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Coefficientwise sum, zero terms dropped."""
    if not a.terms:
        return b
    if not b.terms:
        return a
    out = dict(a.terms)
    for e, c in b.terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = _norm_coeff(s)
        else:
            out.pop(e, None)
    return LaurentPoly._trusted(out)


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Convolution product in canonical form."""
    if not a.terms or not b.terms:
        return _ZERO
    out: Dict[int, Coeff] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return LaurentPoly._trusted({e: _norm_coeff(c) for e, c in out.items()})


def valuation(a: LaurentPoly) -> MagIndex:
    """Minimum stored exponent; +inf for the zero polynomial."""
    if not a.terms:
        return INF
    return min(a.terms)


def leading_coeff(a: LaurentPoly) -> Coeff:
    """Coefficient at the valuation exponent; undefined for zero."""
    if not a.terms:
        raise ValueError("zero polynomial has no leading coefficient")
    return a.terms[min(a.terms)]


def truncate_below(a: LaurentPoly, k: MagIndex) -> LaurentPoly:
    """Keep exactly the terms with exponent < k.

    ``k = +inf`` keeps everything, ``k = -inf`` absorbs everything.
    """
    if k == INF:
        return a
    if k == NEG_INF:
        return _ZERO
    kept = {e: c for e, c in a.terms.items() if e < k}
    if len(kept) == len(a.terms):
        return a
    return LaurentPoly._trusted(kept)


def series_invert(a: LaurentPoly, below: int) -> LaurentPoly:
    """Inverse of ``a`` as a series, keeping exponents in [-val(a), below).

    The result ``b`` is the unique polynomial on that window with
    ``truncate_below(a * b, below + val(a)) == 1``.  Requires a nonzero
    input and ``below > -val(a)`` (a nonempty window).
    """
    if not a.terms:
        raise ZeroDivisionError("cannot invert the zero polynomial")
    va = min(a.terms)
    n = below + va  # number of series coefficients of (a/eps^va)^-1
    if n <= 0:
        raise ValueError(f"empty inversion window [-{va}, {below})")
    lead = [a.terms.get(va + i, 0) for i in range(n)]
    inv0 = Fraction(1, 1) / lead[0]
    coeffs = [inv0]
    for m in range(1, n):
        acc = 0
        for i in range(1, m + 1):
            if lead[i]:
                acc += lead[i] * coeffs[m - i]
        coeffs.append(-acc * inv0 if acc else 0)
    return LaurentPoly({m - va: c for m, c in enumerate(coeffs)})
