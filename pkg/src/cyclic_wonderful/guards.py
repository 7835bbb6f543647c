"""Feasibility guards shared by the fan, Chow and normal-complex builders.

The guards keep desk-scale commands from accidentally requesting exponential
work.  Setting the environment variable ``CYCLIC_WONDERFUL_MAX_CELLS`` to an
integer replaces every default bound with that value (expert use).
"""

from __future__ import annotations

import os

ENV_OVERRIDE = "CYCLIC_WONDERFUL_MAX_CELLS"

DEFAULT_FAN_CELLS = 50_000        # rays + maximal cones of a fan build
DEFAULT_ORACLE_GENERATORS = 1_000  # generator count for the Chow rank oracle
DEFAULT_NORMAL_N = 3               # vertex enumeration dimension cap


class FeasibilityError(ValueError):
    """Raised when a requested computation exceeds its guard bound."""


def _override() -> int | None:
    raw = os.environ.get(ENV_OVERRIDE)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise FeasibilityError(f"{ENV_OVERRIDE} must be an integer, got {raw!r}") from exc


def check_fan_size(rays: int, max_cones: int) -> None:
    bound = _override() or DEFAULT_FAN_CELLS
    if rays + max_cones > bound:
        raise FeasibilityError(
            f"fan with {rays} rays and {max_cones} maximal cones exceeds the "
            f"guard bound {bound} (override with {ENV_OVERRIDE})"
        )


def check_oracle_size(generators: int) -> None:
    bound = _override() or DEFAULT_ORACLE_GENERATORS
    if generators > bound:
        raise FeasibilityError(
            f"rank oracle with {generators} generators exceeds the guard "
            f"bound {bound} (override with {ENV_OVERRIDE})"
        )


def check_normal_complex(n: int, cells: int) -> None:
    override = _override()
    if override is None:
        if n > DEFAULT_NORMAL_N:
            raise FeasibilityError(
                f"normal complex vertex enumeration is guarded to n <= "
                f"{DEFAULT_NORMAL_N}, got n = {n} (override with {ENV_OVERRIDE})"
            )
    elif cells > override:
        raise FeasibilityError(
            f"normal complex with {cells} cells exceeds {ENV_OVERRIDE}={override}"
        )
