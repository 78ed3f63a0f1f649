"""Canonical text form for external numbers.

The output re-parses under the CLI grammar and round-trips to the same
canonical value: terms in increasing exponent order, exact rationals,
the magnitude last as ``M(k)``.  Precise zero prints ``0`` and the
maximal magnitude prints ``Mmax``.
"""

from __future__ import annotations

from typing import Dict

from .external import ExternalNumber
from .laurent import Coeff, LaurentPoly
from .magnitude import INF, NEG_INF, MagIndex
from .ratfun import RatFun


def _term(exp: int, coeff: Coeff) -> str:
    # coeff is positive here; signs are handled by the joiner
    if exp == 0:
        return str(coeff)
    base = "eps" if exp == 1 else f"eps^{exp}"
    return base if coeff == 1 else f"{coeff}*{base}"


def _poly(terms: Dict[int, Coeff]) -> str:
    parts = []
    for i, (e, c) in enumerate(sorted(terms.items())):
        mag = _term(e, -c if c < 0 else c)
        if i == 0:
            parts.append(f"-{mag}" if c < 0 else mag)
        else:
            parts.append(f" - {mag}" if c < 0 else f" + {mag}")
    return "".join(parts)


def _ratfun(r: RatFun) -> str:
    num_terms = {r.shift + i: c for i, c in enumerate(r.num) if c}
    if r.is_polynomial:
        return _poly(num_terms)
    num = _poly(num_terms)
    if len(num_terms) > 1:
        num = f"({num})"
    den = _poly({i: c for i, c in enumerate(r.den) if c})
    return f"{num}/({den})"


def _mag(k: MagIndex) -> str:
    if k == NEG_INF:
        return "Mmax"
    return f"M({k})"


def print_canonical(x: ExternalNumber) -> str:
    k = x.mag.index
    if isinstance(x.rep, RatFun):
        if x.rep.is_zero:
            return "0"
        return _ratfun(x.rep)
    if x.rep.is_zero:
        return _mag(k)
    return f"{_poly(x.rep.terms)} + {_mag(k)}"
