"""Magnitude lattice: orders of magnitude indexed by extended integers.

A magnitude of index ``k`` stands for the set ``M_k = {s : val(s) >= k}``
of scalars, a convex additive subgroup absorbing everything of valuation
at least ``k``.  Indices live in ``Z | {-inf, +inf}``:

* ``M_{+inf} = {0}`` is the minimal (zero) magnitude,
* ``M_{-inf}`` is the maximal magnitude (every scalar).

Note the index order runs against the set order: ``M_j <= M_k`` as sets
exactly when ``j >= k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

INF = math.inf
NEG_INF = -math.inf

#: Extended integer: a plain int, or +/-math.inf.
MagIndex = Union[int, float]


def is_finite(k: MagIndex) -> bool:
    return k != INF and k != NEG_INF


def index_add(a: MagIndex, b: MagIndex) -> MagIndex:
    """Extended addition of indices; +inf absorbs, even against -inf.

    ``+inf + (-inf) = +inf`` encodes that the zero magnitude {0}
    annihilates everything, including the maximal magnitude.
    """
    if a == INF or b == INF:
        return INF
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return a + b


@dataclass(frozen=True, slots=True)
class Magnitude:
    """The convex subgroup ``M_index``; comparisons follow set inclusion."""

    index: MagIndex

    def __le__(self, other: "Magnitude") -> bool:
        return self.index >= other.index

    def __lt__(self, other: "Magnitude") -> bool:
        return self.index > other.index

    def __ge__(self, other: "Magnitude") -> bool:
        return self.index <= other.index

    def __gt__(self, other: "Magnitude") -> bool:
        return self.index < other.index

    def __add__(self, other: "Magnitude") -> "Magnitude":
        # Absorption: the wider magnitude swallows the narrower one.
        return Magnitude(min(self.index, other.index))

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        return Magnitude(index_add(self.index, other.index))

    @property
    def is_zero(self) -> bool:
        return self.index == INF

    @property
    def is_max(self) -> bool:
        return self.index == NEG_INF

    def __repr__(self) -> str:
        if self.index == INF:
            return "Magnitude(0)"
        if self.index == NEG_INF:
            return "Magnitude(max)"
        return f"Magnitude(M_{self.index})"


ZERO_MAG = Magnitude(INF)
MAX_MAG = Magnitude(NEG_INF)
