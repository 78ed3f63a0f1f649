"""Registry of checkable properties: axioms A1-A28 and derived theorems.

Each property draws its operands from a TrialCtx and returns True
(holds), False (counterexample), or None (the trial did not satisfy the
property's hypothesis and is skipped).  Conditional laws are tested by
constrained generation where a satisfying operand can be built directly,
and by filter-and-skip otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from ..external import (
    MAX_MAGNITUDE,
    ONE,
    ZERO,
    ExternalNumber,
    as_element,
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
    magnitude_element,
    magnitude_of,
    rel_uncertainty,
    unity_of,
)
from ..laurent import LaurentPoly
from ..magnitude import INF, NEG_INF
from .gen import TrialCtx, draw_absorbed

Check = Callable[[TrialCtx], Optional[bool]]


@dataclass(frozen=True)
class Property:
    pid: str
    statement: str
    check: Check


_REGISTRY: Dict[str, Property] = {}


def _register(pid: str, statement: str):
    def deco(fn: Check) -> Check:
        if pid in _REGISTRY:
            raise ValueError(f"duplicate property id {pid}")
        _REGISTRY[pid] = Property(pid, statement, fn)
        return fn

    return deco


def get_property(pid: str) -> Property:
    return _REGISTRY[pid]


def all_property_ids() -> List[str]:
    return list(_REGISTRY)


def axiom_ids() -> List[str]:
    return [p for p in _REGISTRY if p.startswith("A")]


def theorem_ids() -> List[str]:
    return [p for p in _REGISTRY if p.startswith("T")]


def _e(x: ExternalNumber) -> ExternalNumber:
    return as_element(magnitude_of(x))


def _R(x: ExternalNumber) -> ExternalNumber:
    return as_element(rel_uncertainty(x))


# --- Addition axioms ------------------------------------------------------


@_register("A1", "addition is associative")
def _a1(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    return en_add(en_add(x, y), z) == en_add(x, en_add(y, z))


@_register("A2", "addition is commutative")
def _a2(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_add(x, y) == en_add(y, x)


@_register("A3", "individualized neutral element: x + e(x) = x, and x + f = x implies e(x) + f = e(x)")
def _a3(ctx):
    x = ctx.draw()
    ex = _e(x)
    if en_add(x, ex) != x:
        return False
    if ctx.rng.random() < 0.5:
        f = ctx.draw_absorbed(x.mag.index)
    else:
        f = ctx.draw()
    if en_add(x, f) == x and en_add(ex, f) != ex:
        return False
    return True


@_register("A4", "symmetric element: x + (-x) = e(x) with e(-x) = e(x)")
def _a4(ctx):
    x = ctx.draw()
    s = en_neg(x)
    return en_add(x, s) == _e(x) and magnitude_of(s) == magnitude_of(x)


@_register("A5", "e(x+y) is e(x) or e(y)")
def _a5(ctx):
    x, y = ctx.draw(), ctx.draw()
    m = magnitude_of(en_add(x, y))
    return m == magnitude_of(x) or m == magnitude_of(y)


# --- Multiplication axioms ------------------------------------------------


@_register("A6", "multiplication is associative")
def _a6(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    return en_mul(en_mul(x, y), z) == en_mul(x, en_mul(y, z))


@_register("A7", "multiplication is commutative")
def _a7(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_mul(x, y) == en_mul(y, x)


@_register("A8", "individualized unity on zeroless x: x*u(x) = x, and x*v = x implies u(x)*v = u(x)")
def _a8(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    u = unity_of(x)
    if en_mul(x, u) != x:
        return False
    if ctx.rng.random() < 0.5:
        v = ctx.put(en_add(ONE, ctx.draw_absorbed(rel_uncertainty(x).index)))
    else:
        v = ctx.draw()
    if en_mul(x, v) == x and en_mul(u, v) != u:
        return False
    return True


@_register("A9", "multiplicative inverse on zeroless x: x*d = u(x) with u(d) = u(x)")
def _a9(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    d = en_inv(x)
    return en_mul(x, d) == unity_of(x) and unity_of(d) == unity_of(x)


@_register("A10", "u(xy) is u(x) or u(y) for zeroless x, y")
def _a10(ctx):
    x = ctx.draw_zeroless()
    y = ctx.draw_zeroless()
    if x is None or y is None:
        return None
    u = unity_of(en_mul(x, y))
    return u == unity_of(x) or u == unity_of(y)


# --- Order axioms ---------------------------------------------------------


@_register("A11", "the order is reflexive")
def _a11(ctx):
    x = ctx.draw()
    return en_le(x, x)


@_register("A12", "the order is antisymmetric")
def _a12(ctx):
    x = ctx.draw()
    r = ctx.rng.random()
    if r < 1 / 3:
        y = ctx.put(x)
    elif r < 2 / 3:
        y = ctx.put(en_add(x, ctx.draw_absorbed(x.mag.index)))
    else:
        y = ctx.draw()
    if en_le(x, y) and en_le(y, x):
        return x == y
    return None


@_register("A13", "the order is transitive")
def _a13(ctx):
    a, b, c = ctx.draw(), ctx.draw(), ctx.draw()
    lo, mid, hi = sorted((a, b, c), key=_SortKey)
    return en_le(lo, hi)


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v: ExternalNumber):
        self.v = v

    def __lt__(self, other: "_SortKey") -> bool:
        return en_lt(self.v, other.v)


@_register("A14", "the order is total")
def _a14(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_le(x, y) or en_le(y, x)


@_register("A15", "the order is compatible with addition")
def _a15(ctx):
    x, y = ctx.draw(), ctx.draw()
    if en_lt(y, x):
        x, y = y, x
    z = ctx.draw()
    return en_le(en_add(x, z), en_add(y, z))


@_register("A16", "y + e(x) = e(x) implies y <= e(x) and -y <= e(x)")
def _a16(ctx):
    x = ctx.draw()
    if ctx.rng.random() < 0.5:
        y = ctx.draw_absorbed(x.mag.index)
    else:
        y = ctx.draw()
    ex = _e(x)
    if en_add(y, ex) != ex:
        return None
    return en_le(y, ex) and en_le(en_neg(y), ex)


@_register("A17", "multiplication by a strictly positive element preserves order")
def _a17(ctx):
    x0 = ctx.draw_zeroless()
    if x0 is None:
        return None
    x = en_abs(x0)
    ctx.operands[-1] = x
    y, z = ctx.draw(), ctx.draw()
    if en_lt(z, y):
        y, z = z, y
    return en_le(en_mul(x, y), en_mul(x, z))


@_register("A18", "amplification: e(y) <= y <= z implies e(x)*y <= e(x)*z")
def _a18(ctx):
    x = ctx.draw()
    y = en_abs(ctx.draw_raw())
    z = en_abs(ctx.draw_raw())
    if en_lt(z, y):
        y, z = z, y
    ctx.put(y)
    ctx.put(z)
    ex = _e(x)
    return en_le(en_mul(ex, y), en_mul(ex, z))


# --- Axioms relating addition and multiplication --------------------------


@_register("A19", "e(x)*y is a magnitude")
def _a19(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_mul(_e(x), y).is_magnitude


@_register("A20", "e(xy) = e(x)*y + e(y)*x")
def _a20(ctx):
    x, y = ctx.draw(), ctx.draw()
    lhs = _e(en_mul(x, y))
    rhs = en_add(en_mul(_e(x), y), en_mul(_e(y), x))
    return lhs == rhs


@_register("A21", "e(u(x)) = e(x)/x for zeroless x")
def _a21(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    return _e(unity_of(x)) == en_mul(_e(x), en_inv(x))


@_register("A22", "xy + xz = x(y+z) + e(x)y + e(x)z")
def _a22(ctx):
    x, y, z = ctx.triple(near_opposite=0.3)
    lhs = en_add(en_mul(x, y), en_mul(x, z))
    ex = _e(x)
    rhs = en_add(
        en_mul(x, en_add(y, z)), en_add(en_mul(ex, y), en_mul(ex, z))
    )
    return lhs == rhs


@_register("A23", "-(xy) = (-x)y")
def _a23(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_neg(en_mul(x, y)) == en_mul(en_neg(x), y)


# --- Axioms of existence ---------------------------------------------------


@_register("A24", "zero is neutral for addition")
def _a24(ctx):
    x = ctx.draw()
    return en_add(ZERO, x) == x


@_register("A25", "one is neutral for multiplication")
def _a25(ctx):
    x = ctx.draw()
    return en_mul(ONE, x) == x


@_register("A26", "the maximal magnitude absorbs every magnitude")
def _a26(ctx):
    x = ctx.draw()
    return en_add(_e(x), MAX_MAGNITUDE) == MAX_MAGNITUDE


@_register("A27", "some magnitude is neither zero nor maximal")
def _a27(ctx):
    lo, hi = ctx.profile.exponent_window
    w = ctx.put(magnitude_element(ctx.rng.randint(lo, hi)))
    return w.is_magnitude and w != ZERO and w != MAX_MAGNITUDE


@_register("A28", "decomposition x = a + e(x) with precise a; zeroless witness between nested magnitudes")
def _a28(ctx):
    x = ctx.draw()
    a, m = decompose(x)
    if en_add(a, as_element(m)) != x or not a.is_precise:
        return False
    lo, hi = ctx.profile.exponent_window
    choices = list(range(lo, hi + 1)) + [INF, NEG_INF]
    j = ctx.rng.choice(choices)
    k = ctx.rng.choice(choices)
    if j == k:
        return True  # no strict nesting to separate
    if j < k:
        j, k = k, j
    # the monomial eps^k (one notch below M_j when k is -inf) separates M_j < M_k
    if k != NEG_INF:
        exp = k
    elif j != INF:
        exp = j - 1
    else:
        exp = 0
    w = ctx.put(en_add(magnitude_element(j), _mono(exp)))
    return (
        w.is_zeroless
        and en_lt(magnitude_element(j), w)
        and en_lt(w, magnitude_element(k))
    )


def _mono(exp: int) -> ExternalNumber:
    from ..external import precise

    return precise(LaurentPoly.eps(exp))


# --- Derived theorems -------------------------------------------------------


@_register("T-cancellation", "x + y = x + z iff e(x) + y = e(x) + z")
def _t_cancel(ctx):
    x, y = ctx.draw(), ctx.draw()
    if ctx.rng.random() < 0.5:
        z = ctx.put(en_add(y, ctx.draw_absorbed(x.mag.index)))
    else:
        z = ctx.draw()
    ex = _e(x)
    return (en_add(x, y) == en_add(x, z)) == (en_add(ex, y) == en_add(ex, z))


@_register("T-representation", "anything equal to a magnitude is its own magnitude")
def _t_repr(ctx):
    y = ctx.draw()
    x = _e(y)
    return x == _e(x)


@_register("T-sym", "-(-x) = x; -(x+y) = -x - y; e(-x) = -e(x) = e(x)")
def _t_sym(ctx):
    x, y = ctx.draw(), ctx.draw()
    if en_neg(en_neg(x)) != x:
        return False
    if en_neg(en_add(x, y)) != en_add(en_neg(x), en_neg(y)):
        return False
    return _e(en_neg(x)) == _e(x) and en_neg(_e(x)) == _e(x)


@_register("T-mag-order-iff", "e(x) + e(y) = e(x) iff e(y) <= e(x)")
def _t_mag_order(ctx):
    x, y = ctx.draw(), ctx.draw()
    ex, ey = _e(x), _e(y)
    return (en_add(ex, ey) == ex) == en_le(ey, ex)


@_register("T-positive-sum", "positives are closed under addition; anything above a positive is positive")
def _t_pos_sum(ctx):
    x = en_abs(ctx.draw_raw())
    y = en_abs(ctx.draw_raw())
    ctx.put(x)
    ctx.put(y)
    if not en_le(_e(en_add(x, y)), en_add(x, y)):
        return False
    big = ctx.draw()
    if en_lt(big, y):
        big = y
    return en_le(_e(big), big)


@_register("T-absorb-iff", "for positive y: y <= e(x) iff e(x) + y = e(x)")
def _t_absorb(ctx):
    x = ctx.draw()
    if ctx.rng.random() < 0.5:
        y = en_abs(ctx.draw_absorbed(x.mag.index))
        ctx.operands[-1] = y
    else:
        y = en_abs(ctx.draw_raw())
        ctx.put(y)
    ex = _e(x)
    return en_le(y, ex) == (en_add(ex, y) == ex)


@_register("T-strict-order", "negatives sit below positives and below every magnitude")
def _t_strict(ctx):
    x0 = ctx.draw_zeroless()
    y0 = ctx.draw_zeroless()
    if x0 is None or y0 is None:
        return None
    x = en_neg(en_abs(x0))
    y = en_abs(y0)
    ctx.operands[-2] = x
    ctx.operands[-1] = y
    if not en_lt(x, y):
        return False
    z = ctx.draw()
    if not en_lt(x, _e(z)):
        return False
    # x' < y' + e(z') with e(z') < e(x') forces x' < y'
    if en_lt(x, en_add(y, _e(z))) and en_lt(_e(z), _e(x)):
        if not en_lt(x, y):
            return False
    return True


@_register("T-unity-not-magnitude", "unities of zeroless elements are zeroless and are no magnitudes")
def _t_unity_not_mag(ctx):
    x = ctx.draw_zeroless()
    y = ctx.draw_zeroless()
    if x is None or y is None:
        return None
    u = unity_of(x)
    return u != _e(u) and u != _e(y)


@_register("T-mag-product", "if x is a magnitude then e(xy) = x*y")
def _t_mag_product(ctx):
    x, y = ctx.draw(), ctx.draw()
    xm = _e(x)
    return _e(en_mul(xm, y)) == en_mul(xm, y)


@_register("T-sign-neglect", "e(y)*(-x) = e(y)*x")
def _t_sign_neglect(ctx):
    x, y = ctx.draw(), ctx.draw()
    ey = _e(y)
    return en_mul(ey, en_neg(x)) == en_mul(ey, x)


@_register("T-zeroless-product", "xy is a magnitude iff x or y is")
def _t_zeroless_product(ctx):
    x, y = ctx.draw(), ctx.draw()
    p = en_mul(x, y)
    return (p == _e(p)) == (x == _e(x) or y == _e(y))


@_register("T-square-not-magnitude", "squares of zeroless elements are zeroless")
def _t_square_not_mag(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    sq = en_mul(x, x)
    return sq != _e(sq)


@_register("T-inverse-magnitude", "u(x)e(x) = x e(u(x)) = e(x); e(1/x) = e(x)/x/x")
def _t_inverse_mag(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    ex = _e(x)
    u = unity_of(x)
    d = en_inv(x)
    if en_mul(u, ex) != ex or en_mul(x, _e(u)) != ex:
        return False
    return _e(d) == en_mul(en_mul(ex, d), d)


@_register("T-scaling-monotone", "e(y) <= e(z) implies x e(y) <= x e(z)")
def _t_scaling(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    if magnitude_of(z) <= magnitude_of(y):
        y, z = z, y
    return en_le(en_mul(x, _e(y)), en_mul(x, _e(z)))


@_register("T-ee-le-xe", "e(x)e(y) <= x e(y)")
def _t_ee_xe(ctx):
    x, y = ctx.draw(), ctx.draw()
    ey = _e(y)
    return en_le(en_mul(_e(x), ey), en_mul(x, ey))


@_register("T-ee-le-exy", "e(x)e(y) <= e(xy)")
def _t_ee_exy(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_le(en_mul(_e(x), _e(y)), _e(en_mul(x, y)))


@_register("T-positive-product", "products of positives are positive")
def _t_pos_product(ctx):
    x = en_abs(ctx.draw_raw())
    y = en_abs(ctx.draw_raw())
    ctx.put(x)
    ctx.put(y)
    p = en_mul(x, y)
    return en_le(_e(p), p)


@_register("T-square-positive", "squares are positive, strictly for zeroless x; e(u(x)) < u(x)")
def _t_square_pos(ctx):
    x = ctx.draw()
    sq = en_mul(x, x)
    if x.is_magnitude:
        return sq == _e(sq)
    if not en_le(_e(sq), sq) or sq == _e(sq):
        return False
    u = unity_of(x)
    return en_lt(_e(u), u)


@_register("T-sign-reversal", "positive times negative is negative")
def _t_sign_reversal(ctx):
    x0 = ctx.draw_zeroless()
    y0 = ctx.draw_zeroless()
    if x0 is None or y0 is None:
        return None
    x = en_abs(x0)
    y = en_neg(en_abs(y0))
    ctx.operands[-2] = x
    ctx.operands[-1] = y
    p = en_mul(x, y)
    return en_lt(p, _e(p))


@_register("T-reversal-correction", "y <= z and x negative imply xz + e(xy) <= xy + e(xz)")
def _t_reversal_corr(ctx):
    x0 = ctx.draw_zeroless()
    if x0 is None:
        return None
    x = en_neg(en_abs(x0))
    ctx.operands[-1] = x
    y, z = ctx.draw(), ctx.draw()
    if en_lt(z, y):
        y, z = z, y
    lhs = en_add(en_mul(x, z), _e(en_mul(x, y)))
    rhs = en_add(en_mul(x, y), _e(en_mul(x, z)))
    return en_le(lhs, rhs)


@_register("T-inverse-sign", "x is strictly positive iff 1/x is")
def _t_inverse_sign(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    d = en_inv(x)
    return en_lt(_e(x), x) == en_lt(_e(d), d)


@_register("T-unity-le", "u(x) <= x implies x is strictly positive")
def _t_unity_le(ctx):
    x0 = ctx.draw_zeroless()
    if x0 is None:
        return None
    x = en_abs(x0)
    if en_lt(x, unity_of(x)):
        x = en_inv(x)
    ctx.operands[-1] = x
    if not en_le(unity_of(x), x):
        return None
    return en_lt(_e(x), x)


@_register("T-inverse-bounds", "u(x) <= x forces 1/x <= u(x); positive x <= u(x) forces u(x) <= 1/x")
def _t_inverse_bounds(ctx):
    x0 = ctx.draw_zeroless()
    if x0 is None:
        return None
    x = en_abs(x0)
    ctx.operands[-1] = x
    ok = True
    for cand in (x, en_inv(x)):
        u = unity_of(cand)
        if en_le(u, cand):
            ok = ok and en_le(en_inv(cand), u)
        if en_lt(_e(cand), cand) and en_le(cand, u):
            ok = ok and en_le(u, en_inv(cand))
    return ok


@_register("T-inverse-mag-le", "e(1/x) < 1/x <= x implies e(1/x) <= e(x)")
def _t_inverse_mag_le(ctx):
    x0 = ctx.draw_zeroless()
    if x0 is None:
        return None
    x = en_abs(x0)
    if en_lt(x, en_inv(x)):
        x = en_inv(x)
    ctx.operands[-1] = x
    d = en_inv(x)
    if not (en_lt(_e(d), d) and en_le(d, x)):
        return None
    return magnitude_of(d) <= magnitude_of(x)


@_register("T-dist-magnitudes", "x(e(y) + e(z)) = x e(y) + x e(z)")
def _t_dist_mags(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    ey, ez = _e(y), _e(z)
    return en_mul(x, en_add(ey, ez)) == en_add(en_mul(x, ey), en_mul(x, ez))


@_register("T-dist-mag-factor", "e(x)(e(y) + e(z)) = e(x)e(y) + e(x)e(z)")
def _t_dist_mag_factor(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    ex, ey, ez = _e(x), _e(y), _e(z)
    return en_mul(ex, en_add(ey, ez)) == en_add(en_mul(ex, ey), en_mul(ex, ez))


@_register("T-dist-absorbed", "e(z) <= e(y) implies x(y + e(z)) = xy + x e(z)")
def _t_dist_absorbed(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    if magnitude_of(y) <= magnitude_of(z):
        y, z = z, y
    ez = _e(z)
    return en_mul(x, en_add(y, ez)) == en_add(en_mul(x, y), en_mul(x, ez))


@_register("T-dist-own-magnitude", "x(y + e(y)) = xy + x e(y) = xy")
def _t_dist_own(ctx):
    x, y = ctx.draw(), ctx.draw()
    ey = _e(y)
    lhs = en_mul(x, en_add(y, ey))
    return lhs == en_add(en_mul(x, y), en_mul(x, ey)) and lhs == en_mul(x, y)


@_register("T-zero-one", "zero and one behave as in ordered rings")
def _t_zero_one(ctx):
    if _e(ZERO) != ZERO or _e(ONE) != ZERO or ONE == ZERO:
        return False
    if unity_of(ONE) != ONE or en_neg(ZERO) != ZERO or en_mul(ONE, ZERO) != ZERO:
        return False
    if not en_lt(ZERO, ONE):
        return False
    x = ctx.draw()
    y = ctx.draw()
    if not en_le(ZERO, _e(x)):
        return False
    xp = en_abs(x)
    if not en_le(_e(xp), xp):
        return False
    yp = en_abs(y)
    if not en_le(ZERO, en_add(xp, yp)):
        return False
    xn = en_neg(xp) if xp.is_zeroless else ZERO
    yn = en_neg(yp) if yp.is_zeroless else ZERO
    return en_le(en_add(xn, yn), ZERO)


@_register("T-zero-absorbs", "x*0 = 0 for every x")
def _t_zero_absorbs(ctx):
    x = ctx.draw()
    return en_mul(x, ZERO) == ZERO


@_register("T-precise-closed", "precise elements are closed under +, -, *, unity, inverse")
def _t_precise_closed(ctx):
    a = ctx.draw_precise()
    b = ctx.draw_precise()
    if not (en_add(a, b).is_precise and en_neg(b).is_precise and en_mul(a, b).is_precise):
        return False
    if a != ZERO:
        if unity_of(a) != ONE or not en_inv(a).is_precise:
            return False
    return True


@_register("T-precise-field", "the precise elements form an ordered field")
def _t_precise_field(ctx):
    a = ctx.draw_precise()
    b = ctx.draw_precise()
    c = ctx.draw_precise()
    if en_add(a, b) != en_add(b, a) or en_mul(a, b) != en_mul(b, a):
        return False
    if en_add(en_add(a, b), c) != en_add(a, en_add(b, c)):
        return False
    if en_mul(en_mul(a, b), c) != en_mul(a, en_mul(b, c)):
        return False
    if en_mul(a, en_add(b, c)) != en_add(en_mul(a, b), en_mul(a, c)):
        return False
    if a != ZERO and en_mul(a, en_inv(a)) != ONE:
        return False
    if en_le(a, b) and not en_le(en_add(a, c), en_add(b, c)):
        return False
    if en_lt(ZERO, a) and en_lt(ZERO, b) and not en_lt(ZERO, en_mul(a, b)):
        return False
    return True


@_register("T-precise-dist", "a precise factor distributes over any sum")
def _t_precise_dist(ctx):
    a = ctx.draw_precise()
    x, y = ctx.draw(), ctx.draw()
    return en_mul(a, en_add(x, y)) == en_add(en_mul(a, x), en_mul(a, y))


@_register("T-precise-dist-criterion", "the criterion certifies distributivity for precise factors")
def _t_precise_dist_crit(ctx):
    from ..laws import DistBranch, dist_decide

    a = ctx.draw_precise()
    y, z = ctx.draw(), ctx.draw()
    report = dist_decide(a, y, z)
    return report.holds and report.branch != DistBranch.FAILS


@_register("T-subdist", "x(y+z) <= xy + xz")
def _t_subdist(ctx):
    from ..laws import subdist_check

    x, y, z = ctx.triple(near_opposite=0.3)
    return subdist_check(x, y, z)


@_register("T-dist-same-sign", "distributivity holds when y and z share a sign")
def _t_dist_same_sign(ctx):
    x = ctx.draw()
    sign = 1 if ctx.rng.random() < 0.5 else -1
    y = en_abs(ctx.draw_raw())
    z = en_abs(ctx.draw_raw())
    if sign < 0:
        y, z = en_neg(y), en_neg(z)
    ctx.put(y)
    ctx.put(z)
    return en_mul(x, en_add(y, z)) == en_add(en_mul(x, y), en_mul(x, z))


@_register("T-doubling", "x(y+y) = xy + xy")
def _t_doubling(ctx):
    x, y = ctx.draw(), ctx.draw()
    return en_mul(x, en_add(y, y)) == en_add(en_mul(x, y), en_mul(x, y))


@_register("T-double-precise", "e(x)(p+p) = e(x)p for precise p")
def _t_double_precise(ctx):
    x = ctx.draw()
    p = ctx.draw_precise()
    ex = _e(x)
    return en_mul(ex, en_add(p, p)) == en_mul(ex, p)


@_register("T-dist-mag-x", "for magnitude x and zeroless y, z: distributivity iff one side wins")
def _t_dist_mag_x(ctx):
    x = ctx.draw()
    y = ctx.draw_zeroless()
    z = ctx.draw_zeroless()
    if y is None or z is None:
        return None
    xm = _e(x)
    lhs = en_mul(xm, en_add(y, z))
    dist = lhs == en_add(en_mul(xm, y), en_mul(xm, z))
    onesided = lhs == en_mul(xm, y) or lhs == en_mul(xm, z)
    return dist == onesided


@_register("T-dist-y-magnitude", "x(z + e(y)) = xz + x e(y)")
def _t_dist_y_mag(ctx):
    x, y, z = ctx.draw(), ctx.draw(), ctx.draw()
    ey = _e(y)
    return en_mul(x, en_add(z, ey)) == en_add(en_mul(x, z), en_mul(x, ey))


@_register("T-dist-precise-mag", "x(p + e(y)) = xp + x e(y) for precise p")
def _t_dist_precise_mag(ctx):
    x, y = ctx.draw(), ctx.draw()
    p = ctx.draw_precise()
    ey = _e(y)
    return en_mul(x, en_add(p, ey)) == en_add(en_mul(x, p), en_mul(x, ey))


@_register("T-R-forward", "R(x) <= R(y) implies e(x)y <= e(y)x")
def _t_r_forward(ctx):
    x = ctx.draw_zeroless()
    y = ctx.draw_zeroless()
    if x is None or y is None:
        return None
    if rel_uncertainty(y) <= rel_uncertainty(x):
        x, y = y, x
    return en_le(en_mul(_e(x), y), en_mul(_e(y), x))


@_register("T-R-converse", "e(x)y <= e(y)x implies R(x) <= R(y)")
def _t_r_converse(ctx):
    x = ctx.draw_zeroless()
    y = ctx.draw_zeroless()
    if x is None or y is None:
        return None
    if en_lt(en_mul(_e(y), x), en_mul(_e(x), y)):
        x, y = y, x
    return rel_uncertainty(x) <= rel_uncertainty(y)


@_register("T-dist-fail-equal", "when the magnitude of x fails to distribute, e(x)y = e(x)z")
def _t_dist_fail_equal(ctx):
    x, y, z = ctx.triple(near_opposite=0.9)
    ex = _e(x)
    if en_mul(ex, en_add(y, z)) == en_add(en_mul(ex, y), en_mul(ex, z)):
        return None
    return en_mul(ex, y) == en_mul(ex, z)


@_register("T-decomp-bounds", "for zeroless x = a + e(x): e(x) < |a| and e(x)/a = e(x)/x = e(u(x))")
def _t_decomp_bounds(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    a, m = decompose(x)
    if not en_lt(as_element(m), en_abs(a)):
        return False
    ga = en_mul(_e(x), en_inv(a))
    gx = en_mul(_e(x), en_inv(x))
    return ga == gx and ga == _e(unity_of(x))


@_register("T-unity-residual", "1 + b + e(u(x)) = u(x) exactly when |b| <= e(u(x))")
def _t_unity_residual(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    r = rel_uncertainty(x)
    if ctx.rng.random() < 0.5:
        b = ctx.put(decompose(draw_absorbed(ctx.rng, ctx.profile, r.index))[0])
    else:
        b = ctx.draw_precise()
    lhs = en_add(en_add(ONE, b), as_element(r))
    return (lhs == unity_of(x)) == en_le(en_abs(b), as_element(r))


@_register("T-unity-expansion", "u(x) = 1 + e(u(x))")
def _t_unity_expansion(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    u = unity_of(x)
    return u == en_add(ONE, _e(u))


@_register("T-unity-mag-lt-one", "e(u(x)) < 1")
def _t_unity_mag_lt_one(ctx):
    x = ctx.draw_zeroless()
    if x is None:
        return None
    return en_lt(_e(unity_of(x)), ONE)


@_register("T-unity-absorbs", "e(x) u(y) = e(x) for zeroless y")
def _t_unity_absorbs(ctx):
    x = ctx.draw()
    y = ctx.draw_zeroless()
    if y is None:
        return None
    ex = _e(x)
    return en_mul(ex, unity_of(y)) == ex


@_register("T-criterion", "distributivity holds iff the magnitude branch or the sharpness branch does")
def _t_criterion(ctx):
    from ..laws import DistBranch, dist_decide

    x, y, z = ctx.triple(near_opposite=0.5)
    report = dist_decide(x, y, z)
    direct = en_mul(x, en_add(y, z)) == en_add(en_mul(x, y), en_mul(x, z))
    ex = _e(x)
    mag_branch = en_mul(ex, en_add(y, z)) == en_add(en_mul(ex, y), en_mul(ex, z))
    rel_branch = rel_uncertainty(x) <= rel_uncertainty(y) + rel_uncertainty(z)
    criterion = mag_branch or rel_branch
    if report.holds != direct or report.holds != criterion:
        return False
    return (report.branch != DistBranch.FAILS) == criterion


@_register("T-criterion-axiom22", "the criterion equivalence and the correction identity both hold")
def _t_criterion_a22(ctx):
    x, y, z = ctx.triple(near_opposite=0.5)
    ex = _e(x)
    lhs = en_add(en_mul(x, y), en_mul(x, z))
    rhs = en_add(en_mul(x, en_add(y, z)), en_add(en_mul(ex, y), en_mul(ex, z)))
    if lhs != rhs:
        return False
    direct = en_mul(x, en_add(y, z)) == lhs
    mag_branch = en_mul(ex, en_add(y, z)) == en_add(en_mul(ex, y), en_mul(ex, z))
    rel_branch = rel_uncertainty(x) <= rel_uncertainty(y) + rel_uncertainty(z)
    return direct == (mag_branch or rel_branch)


@_register("T-subdist-correction", "e(x)(y+z) <= e(x)y + e(x)z")
def _t_subdist_corr(ctx):
    x, y, z = ctx.triple(near_opposite=0.3)
    ex = _e(x)
    return en_le(en_mul(ex, en_add(y, z)), en_add(en_mul(ex, y), en_mul(ex, z)))


@_register("T-relative-uncertainty", "R is e(x)/x on zeroless x, zero on precise, maximal on magnitudes")
def _t_rel_uncertainty(ctx):
    x = ctx.draw()
    r = rel_uncertainty(x)
    if x.is_magnitude:
        return r.index == NEG_INF
    if x.is_precise:
        if r.index != INF:
            return False
    elif as_element(r) != en_mul(_e(x), en_inv(x)):
        return False
    u = unity_of(x)
    return en_mul(x, en_add(u, as_element(r))) == x
