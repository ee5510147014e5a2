# betarec/limits.py
"""
Construction caps shared by all modules.
"""

from dataclasses import dataclass, fields, replace
from functools import lru_cache

from .config import settings


@dataclass(frozen=True)
class Limits:
    """
    Hard caps guarding every potentially unbounded construction.

    Attributes:
        refine_cap: Bisection steps allowed when refining an isolating interval
        orbit_cap: Greedy iterates of 1 before a base is declared unknown(cap)
        expansion_cap: Greedy steps before cycle detection gives up
        complement_cap: States constructed by a complementation
        converter_cap: States of a Frougny converter / carry automaton
        kernel_max_k: Deepest kernel level explored
        kernel_max_classes: Kernel classes kept before giving up
        render_budget: Boxes drawn by one render call
        render_workers: Worker processes used by rendering
    """
    refine_cap: int = 1_000_000
    orbit_cap: int = 10_000
    expansion_cap: int = 10_000
    complement_cap: int = 1_000_000
    converter_cap: int = 10_000
    kernel_max_k: int = 32
    kernel_max_classes: int = 64
    render_budget: int = 2_000_000
    render_workers: int = 1

    def __post_init__(self):
        """Validate caps."""
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 1:
                raise ValueError(f"{f.name} must be positive, got {value}")

    def with_overrides(self, **overrides: int | None) -> "Limits":
        """Copy with the given caps replaced; None values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes) if changes else self


@lru_cache
def get_limits() -> Limits:
    """Get limits built from settings (singleton)."""
    return Limits(
        refine_cap=settings.refine_cap,
        orbit_cap=settings.orbit_cap,
        expansion_cap=settings.expansion_cap,
        complement_cap=settings.complement_cap,
        converter_cap=settings.converter_cap,
        kernel_max_k=settings.kernel_max_k,
        kernel_max_classes=settings.kernel_max_classes,
        render_budget=settings.render_budget,
        render_workers=settings.render_workers,
    )


def override_limits(**overrides: int | None) -> Limits:
    """
    Replace caps process-wide, as the CLI flags do. None values are ignored.

    Raises:
        ValueError: a cap is not positive or unknown
    """
    known = {f.name for f in fields(Limits)}
    unknown = set(overrides) - known
    if unknown:
        raise ValueError(f"unknown limits {sorted(unknown)}")
    get_limits().with_overrides(**overrides)
    for name, value in overrides.items():
        if value is not None:
            setattr(settings, name, value)
    get_limits.cache_clear()
    return get_limits()
