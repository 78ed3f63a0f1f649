"""Seeded generation of canonical external numbers for conformance runs.

Every draw is a deterministic function of a 64-bit seed and a profile;
trial ``i`` of a run derives its own seed by a splitmix-style mix so
reports are reproducible and order-insensitive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..external import (
    MAX_MAGNITUDE,
    ZERO,
    ExternalNumber,
    canonicalize,
    decompose,
    en_add,
    en_neg,
    magnitude_element,
    precise,
)
from ..laurent import Coeff, LaurentPoly
from ..magnitude import INF, NEG_INF, MagIndex, Magnitude
from ..ratfun import P_ONE, RatFun, ratfun_from_laurent, ratfun_mul

_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, trial: int) -> int:
    return _splitmix64((seed & _MASK64) ^ _splitmix64(trial))


@dataclass(frozen=True)
class GenProfile:
    """Knobs for the element generator.

    ``exponent_window`` bounds both term exponents and magnitude
    indices; the class probabilities select pure magnitudes, precise
    elements, or extreme-index elements, with the remainder going to
    ordinary zeroless imprecise elements.
    """

    exponent_window: Tuple[int, int] = (-3, 3)
    coeff_pool: Tuple[Coeff, ...] = (
        1,
        -1,
        2,
        -2,
        3,
        -3,
        Fraction(1, 2),
        Fraction(-1, 2),
        Fraction(3, 2),
        Fraction(2, 3),
    )
    p_magnitude: float = 0.15
    p_precise: float = 0.2
    p_extreme: float = 0.05
    max_terms: int = 3

    def __post_init__(self) -> None:
        lo, hi = self.exponent_window
        if lo > hi:
            raise ValueError("empty exponent window")
        for p in (self.p_magnitude, self.p_precise, self.p_extreme):
            if not 0.0 <= p <= 1.0:
                raise ValueError("class probabilities must lie in [0, 1]")
        if self.p_magnitude + self.p_precise + self.p_extreme > 1.0 + 1e-12:
            raise ValueError("class probabilities must sum to at most 1")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not self.coeff_pool:
            raise ValueError("empty coefficient pool")


DEFAULT_PROFILE = GenProfile()
ALL_MAGNITUDES = GenProfile(p_magnitude=1.0, p_precise=0.0, p_extreme=0.0)
ALL_PRECISE = GenProfile(p_magnitude=0.0, p_precise=1.0, p_extreme=0.0)
EXTREMES = GenProfile(p_magnitude=0.2, p_precise=0.2, p_extreme=0.25)
#: Narrow window and tiny pool so that generated pairs collide often;
#: used to exercise the near-opposite regime of the distributivity law.
NEAR_OPPOSITE = GenProfile(
    exponent_window=(0, 1),
    coeff_pool=(1, -1, 2, -2),
    p_magnitude=0.1,
    p_precise=0.3,
    p_extreme=0.02,
    max_terms=2,
)

PROFILES = {
    "default": DEFAULT_PROFILE,
    "magnitudes": ALL_MAGNITUDES,
    "precise": ALL_PRECISE,
    "extremes": EXTREMES,
    "near-opposite": NEAR_OPPOSITE,
}


def _draw_poly(rng: random.Random, profile: GenProfile) -> LaurentPoly:
    lo, hi = profile.exponent_window
    width = hi - lo + 1
    nterms = rng.randint(1, min(profile.max_terms, width))
    exps = list(range(lo, hi + 1))
    for i in range(nterms):  # partial Fisher-Yates
        j = rng.randrange(i, width)
        exps[i], exps[j] = exps[j], exps[i]
    pool = profile.coeff_pool
    return LaurentPoly({e: pool[rng.randrange(len(pool))] for e in exps[:nterms]})


def _draw_precise(rng: random.Random, profile: GenProfile) -> ExternalNumber:
    r = rng.random()
    if r < 0.1:
        return ZERO
    rf = ratfun_from_laurent(_draw_poly(rng, profile))
    if r > 0.75:
        # divide by 1 + c*eps^d to get a genuine quotient
        hi = max(1, profile.exponent_window[1])
        d = rng.randint(1, hi)
        c = rng.choice(profile.coeff_pool)
        rf = ratfun_mul(rf, RatFun(0, P_ONE, (1,) + (0,) * (d - 1) + (c,)))
    return precise(rf)


def _draw_imprecise(rng: random.Random, profile: GenProfile) -> ExternalNumber:
    lo, hi = profile.exponent_window
    p = _draw_poly(rng, profile)
    k = rng.randint(min(p.terms) + 1, hi + 1)
    return canonicalize(p, Magnitude(k))


def draw_external(rng: random.Random, profile: GenProfile) -> ExternalNumber:
    r = rng.random()
    if r < profile.p_magnitude:
        lo, hi = profile.exponent_window
        return magnitude_element(rng.randint(lo, hi))
    r -= profile.p_magnitude
    if r < profile.p_precise:
        return _draw_precise(rng, profile)
    r -= profile.p_precise
    if r < profile.p_extreme:
        return MAX_MAGNITUDE if rng.random() < 0.5 else ZERO
    return _draw_imprecise(rng, profile)


def gen_external(seed: int, profile: GenProfile = DEFAULT_PROFILE) -> ExternalNumber:
    """Deterministic canonical element for (seed, profile)."""
    return draw_external(random.Random(_splitmix64(seed & _MASK64)), profile)


def draw_absorbed(rng: random.Random, profile: GenProfile, j: MagIndex) -> ExternalNumber:
    """Element t with t + M_j == M_j (valuation and index at least j)."""
    if j == NEG_INF:
        return draw_external(rng, profile)
    if j == INF:
        return ZERO
    t = draw_external(rng, profile)
    r = rng.randint(0, 1)
    if t.is_magnitude:
        ti = t.mag.index
        if ti == INF or ti == NEG_INF:
            return magnitude_element(j + r)
        return magnitude_element(max(ti, j) + r)
    if t.is_precise:
        delta = j - t.rep.shift + r
        return ExternalNumber(
            RatFun(t.rep.shift + delta, t.rep.num, t.rep.den), t.mag
        )
    delta = j - min(t.rep.terms) + r
    return ExternalNumber(t.rep.shifted(delta), Magnitude(t.mag.index + delta))


def _tiny(rng: random.Random, profile: GenProfile) -> ExternalNumber:
    lo, hi = profile.exponent_window
    d = rng.randint(hi, hi + 2)
    return precise(LaurentPoly.eps(d, rng.choice(profile.coeff_pool)))


def draw_triple(
    rng: random.Random, profile: GenProfile, near_opposite: float = 0.0
) -> Tuple[ExternalNumber, ExternalNumber, ExternalNumber]:
    """Operand triple; with probability ``near_opposite`` the third is
    the exact or slightly perturbed opposite of the second."""
    x = draw_external(rng, profile)
    y = draw_external(rng, profile)
    if rng.random() < near_opposite:
        z = en_neg(y)
        if rng.random() < 0.5:
            z = en_add(z, _tiny(rng, profile))
    else:
        z = draw_external(rng, profile)
    return x, y, z


class TrialCtx:
    """Per-trial state: an isolated RNG plus the operands to report."""

    __slots__ = ("rng", "profile", "operands")

    def __init__(self, rng: random.Random, profile: GenProfile):
        self.rng = rng
        self.profile = profile
        self.operands: List[ExternalNumber] = []

    def draw_raw(self) -> ExternalNumber:
        return draw_external(self.rng, self.profile)

    def put(self, v: ExternalNumber) -> ExternalNumber:
        self.operands.append(v)
        return v

    def draw(self) -> ExternalNumber:
        return self.put(self.draw_raw())

    def draw_zeroless(self) -> Optional[ExternalNumber]:
        """Record and return a zeroless draw, or None (skip the trial)."""
        v = self.draw()
        return None if v.is_magnitude else v

    def draw_precise(self) -> ExternalNumber:
        return self.put(decompose(self.draw_raw())[0])

    def draw_absorbed(self, j: MagIndex) -> ExternalNumber:
        return self.put(draw_absorbed(self.rng, self.profile, j))

    def triple(self, near_opposite: float = 0.0):
        x, y, z = draw_triple(self.rng, self.profile, near_opposite)
        self.operands.extend((x, y, z))
        return x, y, z
