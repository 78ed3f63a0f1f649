"""Exact rational functions of the infinitesimal, in canonical form.

A nonzero value is stored as ``eps**shift * num/den`` where ``num`` and
``den`` are coprime dense polynomials with nonzero constant terms and the
denominator is normalized to constant term 1.  This makes equality a
structural check.  Zero is the distinguished value with an empty
numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .laurent import Coeff, LaurentPoly, _norm_coeff
from .magnitude import INF, NEG_INF, MagIndex

#: Dense polynomial: coefficient of eps**i at position i, no trailing zeros.
Poly = Tuple[Coeff, ...]

P_ZERO: Poly = ()
P_ONE: Poly = (1,)


def _p_trim(cs: list) -> Poly:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(_norm_coeff(c) for c in cs)


def _p_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _p_trim(out)


def _p_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _p_trim(out)


def _p_scale(a: Poly, q: Coeff) -> Poly:
    if not q:
        return P_ZERO
    return tuple(_norm_coeff(c * q) for c in a)


def _int_lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def _to_int_poly(a: Poly) -> Tuple[int, ...]:
    scale = 1
    for c in a:
        if isinstance(c, Fraction):
            scale = _int_lcm(scale, c.denominator)
    if scale == 1:
        return tuple(int(c) for c in a)
    return tuple(int(c * scale) for c in a)


def _int_primitive(a: list) -> Tuple[int, ...]:
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return tuple(a)
    return tuple(c // g for c in a)


def _int_prem(a, b) -> list:
    """Pseudo-remainder of integer polynomials (deg a >= deg b)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead:
            r = [c * lb for c in r]
            off = len(r) - 1 - db
            for i, c in enumerate(b):
                r[off + i] -= lead * c
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


def _p_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; inputs are nonzero with nonzero constant terms, so a
    constant operand short-circuits to 1."""
    if len(a) == 1 or len(b) == 1:
        return P_ONE
    A = _int_primitive(list(_to_int_poly(a)))
    B = _int_primitive(list(_to_int_poly(b)))
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        R = _int_prem(A, B)
        if not R:
            return _p_scale(B, Fraction(1, B[-1]))  # B divides A
        A, B = B, _int_primitive(R)
    # a nonzero constant remainder means the inputs are coprime
    return P_ONE


def _p_divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a/b; b must divide a."""
    if not a:
        return P_ZERO
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(out) - 1, -1, -1):
        q = Fraction(r[k + len(b) - 1]) / lb
        out[k] = q
        for i, c in enumerate(b):
            r[k + i] -= q * c
    return _p_trim(out)


@dataclass(frozen=True, slots=True)
class RatFun:
    """Canonical quotient ``eps**shift * num/den``."""

    shift: int
    num: Poly
    den: Poly

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def __add__(self, other: "RatFun") -> "RatFun":
        return ratfun_add(self, other)

    def __neg__(self) -> "RatFun":
        return RatFun(self.shift, _p_neg(self.num), self.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return ratfun_add(self, -other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return ratfun_mul(self, other)

    def inv(self) -> "RatFun":
        return ratfun_inv(self)

    def __repr__(self) -> str:
        if self.is_zero:
            return "RatFun(0)"
        return f"RatFun(eps^{self.shift} * {self.num}/{self.den})"


RF_ZERO = RatFun(0, P_ZERO, P_ONE)
RF_ONE = RatFun(0, P_ONE, P_ONE)


def ratfun(shift: int, num: Poly, den: Poly) -> RatFun:
    """Build the canonical form of ``eps**shift * num/den``."""
    if not num:
        return RF_ZERO
    if not den:
        raise ZeroDivisionError("zero denominator")
    vn = next(i for i, c in enumerate(num) if c)
    vd = next(i for i, c in enumerate(den) if c)
    shift += vn - vd
    num = num[vn:]
    den = den[vd:]
    if den != P_ONE:
        g = _p_gcd(num, den)
        if len(g) > 1:
            num = _p_divexact(num, g)
            den = _p_divexact(den, g)
        c = den[0]
        if c != 1:
            inv_c = Fraction(1) / c
            num = _p_scale(num, inv_c)
            den = _p_scale(den, inv_c)
    return RatFun(shift, num, den)


def ratfun_from_rational(q: Coeff) -> RatFun:
    q = _norm_coeff(q)
    if not q:
        return RF_ZERO
    return RatFun(0, (q,), P_ONE)


def ratfun_from_laurent(p: LaurentPoly) -> RatFun:
    if p.is_zero:
        return RF_ZERO
    v = min(p.terms)
    top = max(p.terms)
    num = tuple(p.terms.get(v + i, 0) for i in range(top - v + 1))
    return RatFun(v, num, P_ONE)


def ratfun_add(a: RatFun, b: RatFun) -> RatFun:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    s = min(a.shift, b.shift)
    na = _p_shift(a.num, a.shift - s)
    nb = _p_shift(b.num, b.shift - s)
    if a.den == b.den:
        return ratfun(s, _p_add(na, nb), a.den)
    return ratfun(s, _p_add(_p_mul(na, b.den), _p_mul(nb, a.den)), _p_mul(a.den, b.den))


def _p_shift(a: Poly, k: int) -> Poly:
    if k == 0 or not a:
        return a
    return (0,) * k + a


def ratfun_mul(a: RatFun, b: RatFun) -> RatFun:
    if a.is_zero or b.is_zero:
        return RF_ZERO
    if a.den == P_ONE and b.den == P_ONE:
        return RatFun(a.shift + b.shift, _p_mul(a.num, b.num), P_ONE)
    # operands are canonical, so only cross factors can cancel
    na, da, nb, db = a.num, a.den, b.num, b.den
    g1 = _p_gcd(na, db)
    if len(g1) > 1:
        na = _p_divexact(na, g1)
        db = _p_divexact(db, g1)
    g2 = _p_gcd(nb, da)
    if len(g2) > 1:
        nb = _p_divexact(nb, g2)
        da = _p_divexact(da, g2)
    num = _p_mul(na, nb)
    den = _p_mul(da, db)
    c = den[0]
    if c != 1:
        inv_c = Fraction(1) / c
        num = _p_scale(num, inv_c)
        den = _p_scale(den, inv_c)
    return RatFun(a.shift + b.shift, num, den)


def ratfun_inv(a: RatFun) -> RatFun:
    if a.is_zero:
        raise ZeroDivisionError("cannot invert zero")
    return ratfun(-a.shift, a.den, a.num)


def ratfun_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    """Dispatch by name: add, mul, neg, inv (neg/inv ignore ``b``)."""
    if op == "add":
        return ratfun_add(a, b)
    if op == "mul":
        return ratfun_mul(a, b)
    if op == "neg":
        return -a
    if op == "inv":
        return ratfun_inv(a)
    raise ValueError(f"unknown operation {op!r}")


def ratfun_valuation(a: RatFun) -> MagIndex:
    return INF if a.is_zero else a.shift


def ratfun_leading(a: RatFun) -> Coeff:
    """Leading series coefficient, i.e. num(0)/den(0); den(0) is 1."""
    if a.is_zero:
        raise ValueError("zero has no leading coefficient")
    return a.num[0]


def ratfun_sign(a: RatFun) -> int:
    if a.is_zero:
        return 0
    return 1 if a.num[0] > 0 else -1


def ratfun_expand_below(a: RatFun, k: MagIndex) -> LaurentPoly:
    """Series expansion of ``a`` truncated below exponent ``k``.

    ``k = +inf`` is only valid for polynomial quotients; callers holding a
    genuine quotient must pre-truncate at a finite index.
    """
    if a.is_zero or k == NEG_INF:
        return LaurentPoly.zero()
    if k == INF:
        if not a.is_polynomial:
            raise ValueError("infinite expansion of a non-polynomial quotient")
        return ratfun_to_laurent(a)
    count = k - a.shift
    if count <= 0:
        return LaurentPoly.zero()
    num, den = a.num, a.den
    coeffs: list = []
    for m in range(count):
        c = num[m] if m < len(num) else 0
        # den[0] == 1, so the recurrence needs no division
        for i in range(1, min(m, len(den) - 1) + 1):
            c -= den[i] * coeffs[m - i]
        coeffs.append(c)
    return LaurentPoly({a.shift + m: c for m, c in enumerate(coeffs)})


def ratfun_to_laurent(a: RatFun) -> LaurentPoly:
    if not a.is_polynomial:
        raise ValueError("not a polynomial")
    return LaurentPoly({a.shift + i: c for i, c in enumerate(a.num)})
