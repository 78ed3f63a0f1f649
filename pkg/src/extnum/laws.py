"""Decision procedures for the distributive law.

``x*(y+z)`` and ``x*y + x*z`` can differ, but only by a magnitude:
the exact identity is ``xy + xz = x(y+z) + e(x)y + e(x)z``.  Ordinary
distributivity holds exactly when either the factor's magnitude already
distributes over ``y`` and ``z``, or the factor is relatively at least
as sharp as the terms: ``R(x) <= R(y) + R(z)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .external import (
    ExternalNumber,
    as_element,
    en_abs,
    en_add,
    en_compare,
    en_le,
    en_mul,
    en_neg,
    magnitude_of,
    rel_uncertainty,
)
from .fmt import print_canonical


class ModelViolationError(RuntimeError):
    """An identity the model guarantees failed to hold; a bug if raised."""


class DistBranch(enum.Enum):
    MAGNITUDE_DISTRIBUTES = "magnitude"
    RELATIVE_UNCERTAINTY = "relative"
    FAILS = "none"


@dataclass(frozen=True, slots=True)
class DistReport:
    holds: bool
    branch: DistBranch
    lhs: ExternalNumber  # x*(y+z)
    rhs: ExternalNumber  # x*y + x*z
    correction: ExternalNumber  # e(x)*y + e(x)*z


def _e(x: ExternalNumber) -> ExternalNumber:
    return as_element(magnitude_of(x))


def dist_decide(x: ExternalNumber, y: ExternalNumber, z: ExternalNumber) -> DistReport:
    """Evaluate both sides and report which criterion branch applies.

    The magnitude branch is checked first; when both branches hold the
    report names the magnitude one.
    """
    lhs = en_mul(x, en_add(y, z))
    rhs = en_add(en_mul(x, y), en_mul(x, z))
    ex = _e(x)
    correction = en_add(en_mul(ex, y), en_mul(ex, z))
    if en_mul(ex, en_add(y, z)) == correction:
        branch = DistBranch.MAGNITUDE_DISTRIBUTES
    elif rel_uncertainty(x) <= rel_uncertainty(y) + rel_uncertainty(z):
        branch = DistBranch.RELATIVE_UNCERTAINTY
    else:
        branch = DistBranch.FAILS
    return DistReport(
        holds=(lhs == rhs), branch=branch, lhs=lhs, rhs=rhs, correction=correction
    )


def subdist_check(x: ExternalNumber, y: ExternalNumber, z: ExternalNumber) -> bool:
    """x*(y+z) <= x*y + x*z; the model guarantees True."""
    return en_compare(en_mul(x, en_add(y, z)), en_add(en_mul(x, y), en_mul(x, z))) <= 0


def axiom22_residual(
    x: ExternalNumber, y: ExternalNumber, z: ExternalNumber
) -> ExternalNumber:
    """Common value of ``xy + xz`` and ``x(y+z) + e(x)y + e(x)z``.

    The two are equal in the model; a mismatch is a model bug and raises.
    """
    left = en_add(en_mul(x, y), en_mul(x, z))
    ex = _e(x)
    right = en_add(en_mul(x, en_add(y, z)), en_add(en_mul(ex, y), en_mul(ex, z)))
    if left != right:
        raise ModelViolationError(
            f"correction identity failed: {print_canonical(left)} != "
            f"{print_canonical(right)} for x={print_canonical(x)}; "
            f"y={print_canonical(y)}; z={print_canonical(z)}"
        )
    return left


SPECIAL_CASES = (
    "both-magnitudes",
    "absorbed-magnitude",
    "same-sign",
    "y-plus-own-magnitude",
)


def dist_special_cases(
    x: ExternalNumber, y: ExternalNumber, z: ExternalNumber, case: str
) -> bool:
    """Check one of the named always-distributive configurations.

    Raises ValueError when the inputs do not satisfy the case's
    hypothesis; otherwise returns whether the case's identity holds
    (the model guarantees True).
    """
    if case == "both-magnitudes":
        if not (y.is_magnitude and z.is_magnitude):
            raise ValueError("both-magnitudes requires y and z to be magnitudes")
        return en_mul(x, en_add(y, z)) == en_add(en_mul(x, y), en_mul(x, z))
    if case == "absorbed-magnitude":
        if not magnitude_of(z) <= magnitude_of(y):
            raise ValueError("absorbed-magnitude requires e(z) <= e(y)")
        ez = _e(z)
        return en_mul(x, en_add(y, ez)) == en_add(en_mul(x, y), en_mul(x, ez))
    if case == "same-sign":
        y_pos = en_le(_e(y), y)
        z_pos = en_le(_e(z), z)
        y_neg = en_le(y, _e(y))
        z_neg = en_le(z, _e(z))
        if not ((y_pos and z_pos) or (y_neg and z_neg)):
            raise ValueError("same-sign requires y and z of the same sign")
        return en_mul(x, en_add(y, z)) == en_add(en_mul(x, y), en_mul(x, z))
    if case == "y-plus-own-magnitude":
        ey = _e(y)
        lhs = en_mul(x, en_add(y, ey))
        return lhs == en_add(en_mul(x, y), en_mul(x, ey)) and lhs == en_mul(x, y)
    raise ValueError(f"unknown case {case!r}; expected one of {SPECIAL_CASES}")
