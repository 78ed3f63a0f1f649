"""Execute registered properties over seeded trials and report results.

Report lines are stable for a given (seed, profile, trials): trial i
derives its own RNG from a split of (seed, i), so results never depend
on evaluation order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..fmt import print_canonical
from .gen import DEFAULT_PROFILE, GenProfile, TrialCtx, trial_seed
from .registry import _REGISTRY, Property, all_property_ids

_OPERAND_NAMES = ("x", "y", "z", "v", "w", "t", "s", "r")


class UnknownPropertyError(KeyError):
    pass


@dataclass(frozen=True)
class ConformanceReport:
    property_id: str
    trials: int
    failures: int
    effective: int
    first_counterexample: Optional[Tuple[Tuple[str, str], ...]]
    seed: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def low_coverage(self) -> bool:
        # fewer than a quarter of the trials satisfied the hypothesis
        return self.trials > 0 and self.effective * 4 < self.trials


def run_property(
    property_id: str,
    trials: int,
    seed: int,
    profile: GenProfile = DEFAULT_PROFILE,
) -> ConformanceReport:
    try:
        prop: Property = _REGISTRY[property_id]
    except KeyError:
        raise UnknownPropertyError(property_id) from None
    failures = 0
    effective = 0
    first: Optional[Tuple[Tuple[str, str], ...]] = None
    for i in range(trials):
        ctx = TrialCtx(random.Random(trial_seed(seed, i)), profile)
        verdict = prop.check(ctx)
        if verdict is None:
            continue
        effective += 1
        if not verdict:
            failures += 1
            if first is None:
                first = tuple(
                    (name, print_canonical(value))
                    for name, value in zip(_OPERAND_NAMES, ctx.operands)
                )
    return ConformanceReport(property_id, trials, failures, effective, first, seed)


def run_all(
    trials: int, seed: int, profile: GenProfile = DEFAULT_PROFILE
) -> List[ConformanceReport]:
    return [run_property(pid, trials, seed, profile) for pid in all_property_ids()]


def render_report(report: ConformanceReport) -> str:
    line = f"{report.property_id} trials={report.trials} failures={report.failures}"
    if report.first_counterexample:
        inner = "; ".join(f"{n}={s}" for n, s in report.first_counterexample)
        line += f" [counterexample: {inner}]"
    if report.low_coverage:
        line += f" [low coverage: effective={report.effective}]"
    return line


def render_all(reports: List[ConformanceReport]) -> str:
    return "\n".join(render_report(r) for r in reports)
