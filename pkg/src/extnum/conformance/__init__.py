"""Randomized conformance suite: seeded generator, property registry, runner."""

from .gen import (
    ALL_MAGNITUDES,
    ALL_PRECISE,
    DEFAULT_PROFILE,
    EXTREMES,
    NEAR_OPPOSITE,
    PROFILES,
    GenProfile,
    draw_external,
    draw_triple,
    gen_external,
    trial_seed,
)
from .registry import (
    Property,
    all_property_ids,
    axiom_ids,
    get_property,
    theorem_ids,
)
from .runner import (
    ConformanceReport,
    UnknownPropertyError,
    render_all,
    render_report,
    run_all,
    run_property,
)

__all__ = [
    "ALL_MAGNITUDES",
    "ALL_PRECISE",
    "DEFAULT_PROFILE",
    "EXTREMES",
    "NEAR_OPPOSITE",
    "PROFILES",
    "GenProfile",
    "Property",
    "ConformanceReport",
    "UnknownPropertyError",
    "all_property_ids",
    "axiom_ids",
    "draw_external",
    "draw_triple",
    "gen_external",
    "get_property",
    "render_all",
    "render_report",
    "run_all",
    "run_property",
    "theorem_ids",
    "trial_seed",
]
