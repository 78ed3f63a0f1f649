"""External numbers: a scalar representative plus an order of magnitude.

An external number ``a + M_k`` stands for the set of scalars that differ
from ``a`` by something of valuation at least ``k``.  Canonical form:

* finite index ``k``: the representative is a Laurent polynomial whose
  exponents are all < ``k``;
* index ``+inf``: a *precise* element, an exact rational function
  (``M_{+inf} = {0}``, so nothing is blurred away);
* index ``-inf``: the maximal magnitude; the representative is 0.

An element whose representative is 0 is a pure magnitude (it equals its
own neutral element); everything else is *zeroless*.  Unity and
multiplicative inverse exist exactly on the zeroless elements.

The total order is decided by the exact difference of representatives
when that difference is not absorbed by either magnitude; otherwise the
two sets are nested and inclusion decides (narrower <= wider).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .laurent import (
    Coeff,
    LaurentPoly,
    leading_coeff,
    poly_add,
    poly_mul,
    series_invert,
    truncate_below,
    valuation,
)
from .magnitude import INF, NEG_INF, MAX_MAG, ZERO_MAG, MagIndex, Magnitude, index_add
from .ratfun import (
    RF_ONE,
    RF_ZERO,
    RatFun,
    ratfun_expand_below,
    ratfun_from_laurent,
    ratfun_from_rational,
    ratfun_inv,
    ratfun_to_laurent,
)

Scalar = Union[LaurentPoly, RatFun]


class NotZerolessError(ValueError):
    """Raised when unity or inverse is requested for a pure magnitude."""


class SignClass(enum.Enum):
    NEGATIVE = "negative"
    MAGNITUDE_ZERO = "magnitude-zero"
    POSITIVE = "positive"


@dataclass(frozen=True, slots=True)
class ExternalNumber:
    rep: Scalar
    mag: Magnitude

    @property
    def is_precise(self) -> bool:
        return self.mag.index == INF

    @property
    def is_magnitude(self) -> bool:
        return self.rep.is_zero

    @property
    def is_zeroless(self) -> bool:
        return not self.rep.is_zero

    def __add__(self, other: "ExternalNumber") -> "ExternalNumber":
        return en_add(self, other)

    def __sub__(self, other: "ExternalNumber") -> "ExternalNumber":
        return en_add(self, en_neg(other))

    def __neg__(self) -> "ExternalNumber":
        return en_neg(self)

    def __mul__(self, other: "ExternalNumber") -> "ExternalNumber":
        return en_mul(self, other)

    def __repr__(self) -> str:
        from .fmt import print_canonical

        return f"ExternalNumber({print_canonical(self)})"


ZERO = ExternalNumber(RF_ZERO, ZERO_MAG)
ONE = ExternalNumber(RF_ONE, ZERO_MAG)
MAX_MAGNITUDE = ExternalNumber(LaurentPoly.zero(), MAX_MAG)


def _scalar_val(rep: Scalar) -> MagIndex:
    if isinstance(rep, LaurentPoly):
        return INF if not rep.terms else min(rep.terms)
    return INF if rep.is_zero else rep.shift


def _scalar_lead_sign(rep: Scalar) -> int:
    if isinstance(rep, LaurentPoly):
        if not rep.terms:
            return 0
        return 1 if rep.terms[min(rep.terms)] > 0 else -1
    if rep.is_zero:
        return 0
    return 1 if rep.num[0] > 0 else -1


def _poly_below(rep: Scalar, k: MagIndex) -> LaurentPoly:
    if isinstance(rep, LaurentPoly):
        return truncate_below(rep, k)
    return ratfun_expand_below(rep, k)


def _as_ratfun(rep: Scalar) -> RatFun:
    if isinstance(rep, RatFun):
        return rep
    return ratfun_from_laurent(rep)


def canonicalize(rep, mag: Magnitude) -> ExternalNumber:
    """Quotient map onto canonical forms.

    ``rep`` may be a LaurentPoly, a RatFun, or a plain rational.  The
    representative is truncated below the magnitude index; a fully
    absorbed representative leaves the pure magnitude.
    """
    if isinstance(rep, (int, Fraction)):
        rep = ratfun_from_rational(rep)
    k = mag.index
    if k == INF:
        return ExternalNumber(_as_ratfun(rep), ZERO_MAG)
    if k == NEG_INF:
        return MAX_MAGNITUDE
    return ExternalNumber(_poly_below(rep, k), mag)


def magnitude_element(k: MagIndex) -> ExternalNumber:
    """The magnitude of index ``k`` viewed as an element."""
    if k == INF:
        return ZERO
    if k == NEG_INF:
        return MAX_MAGNITUDE
    return ExternalNumber(LaurentPoly.zero(), Magnitude(k))


def as_element(m: Magnitude) -> ExternalNumber:
    return magnitude_element(m.index)


def precise(rep) -> ExternalNumber:
    """Exact precise element from a rational, polynomial, or quotient."""
    if isinstance(rep, (int, Fraction)):
        rep = ratfun_from_rational(rep)
    return ExternalNumber(_as_ratfun(rep), ZERO_MAG)


def en_add(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    j = x.mag.index
    k = y.mag.index
    m = j if j < k else k
    if m == INF:
        return ExternalNumber(x.rep + y.rep, ZERO_MAG)
    if m == NEG_INF:
        return MAX_MAGNITUDE
    a = _poly_below(x.rep, m)
    b = _poly_below(y.rep, m)
    return ExternalNumber(poly_add(a, b), Magnitude(m))


def en_neg(x: ExternalNumber) -> ExternalNumber:
    if x.rep.is_zero:
        return x
    return ExternalNumber(-x.rep, x.mag)


def en_mul(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    """Product; the result magnitude collects every uncertainty source.

    For ``x = a + M_j`` and ``y = b + M_k`` the blur of the product spans
    ``a*M_k + b*M_j + M_j*M_k``, so the result index is
    ``min(j + val(b), k + val(a), j + k)`` in extended arithmetic.
    """
    a, b = x.rep, y.rep
    j = x.mag.index
    k = y.mag.index
    mu = min(
        index_add(j, _scalar_val(b)),
        index_add(k, _scalar_val(a)),
        index_add(j, k),
    )
    if mu == INF:
        if j == INF and k == INF:
            return ExternalNumber(a * b, ZERO_MAG)
        return ZERO  # a zero factor: the product set collapses to {0}
    if mu == NEG_INF:
        return MAX_MAGNITUDE
    if isinstance(a, RatFun):
        if a.is_polynomial:
            a = ratfun_to_laurent(a)
    if isinstance(b, RatFun):
        if b.is_polynomial:
            b = ratfun_to_laurent(b)
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        rep = truncate_below(poly_mul(a, b), mu)
    else:
        rep = ratfun_expand_below(_as_ratfun(a) * _as_ratfun(b), mu)
    return ExternalNumber(rep, Magnitude(mu))


def magnitude_of(x: ExternalNumber) -> Magnitude:
    """The individualized neutral element e(x)."""
    return x.mag


def unity_of(x: ExternalNumber) -> ExternalNumber:
    """The individualized unity u(x) = 1 + M_{k - val}; zeroless only."""
    if x.rep.is_zero:
        raise NotZerolessError("unity undefined for magnitudes")
    if x.mag.index == INF:
        return ONE
    r = x.mag.index - min(x.rep.terms)
    return ExternalNumber(LaurentPoly.one(), Magnitude(r))


def en_inv(x: ExternalNumber) -> ExternalNumber:
    """Multiplicative inverse: x * en_inv(x) == unity_of(x) exactly."""
    if x.rep.is_zero:
        raise NotZerolessError("inverse undefined for magnitudes")
    if x.mag.index == INF:
        return ExternalNumber(ratfun_inv(x.rep), ZERO_MAG)
    va = min(x.rep.terms)
    below = x.mag.index - 2 * va
    return ExternalNumber(series_invert(x.rep, below), Magnitude(below))


def rel_uncertainty(x: ExternalNumber) -> Magnitude:
    """Relative uncertainty: e(u(x)) for zeroless x, maximal for magnitudes."""
    if x.rep.is_zero:
        return MAX_MAG
    if x.mag.index == INF:
        return ZERO_MAG
    return Magnitude(x.mag.index - min(x.rep.terms))


def _diff_val_sign(xr: Scalar, yr: Scalar) -> Tuple[MagIndex, int]:
    """Valuation and leading sign of the exact difference yr - xr."""
    if isinstance(xr, LaurentPoly) and isinstance(yr, LaurentPoly):
        d = yr - xr
        if not d.terms:
            return INF, 0
        v = min(d.terms)
        return v, (1 if d.terms[v] > 0 else -1)
    d = _as_ratfun(yr) - _as_ratfun(xr)
    if d.is_zero:
        return INF, 0
    return d.shift, (1 if d.num[0] > 0 else -1)


def en_compare(x: ExternalNumber, y: ExternalNumber) -> int:
    """Total order: -1 if x < y, 0 if equal, 1 if x > y.

    The exact difference decides while it is not absorbed by the wider
    of the two magnitudes; nested sets fall back to inclusion.
    """
    j = x.mag.index
    k = y.mag.index
    v, s = _diff_val_sign(x.rep, y.rep)
    if s and v < (j if j < k else k):
        return -s
    if j == k:
        return 0
    return -1 if j > k else 1


def en_le(x: ExternalNumber, y: ExternalNumber) -> bool:
    return en_compare(x, y) <= 0


def en_lt(x: ExternalNumber, y: ExternalNumber) -> bool:
    return en_compare(x, y) < 0


def en_abs(x: ExternalNumber) -> ExternalNumber:
    """x when e(x) <= x, else -x; magnitudes are their own absolute value."""
    if _scalar_lead_sign(x.rep) < 0:
        return en_neg(x)
    return x


def decompose(x: ExternalNumber) -> Tuple[ExternalNumber, Magnitude]:
    """Split x into an exact precise part and its magnitude."""
    if x.mag.index == INF:
        return x, x.mag
    return ExternalNumber(ratfun_from_laurent(x.rep), ZERO_MAG), x.mag


def classify(x: ExternalNumber) -> SignClass:
    s = _scalar_lead_sign(x.rep)
    if s == 0:
        return SignClass.MAGNITUDE_ZERO
    return SignClass.POSITIVE if s > 0 else SignClass.NEGATIVE


def en_pow(x: ExternalNumber, n: int) -> ExternalNumber:
    """Integer power; negative exponents go through the inverse."""
    if n < 0:
        return en_pow(en_inv(x), -n)
    acc = ONE
    for _ in range(n):
        acc = en_mul(acc, x)
    return acc
