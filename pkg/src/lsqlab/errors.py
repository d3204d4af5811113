"""Shared exception types and exhaustive-search cap handling."""

from __future__ import annotations

import os

ENV_CAP = "LSQLAB_MAX_EXHAUSTIVE"


class CapabilityError(RuntimeError):
    """An exact/exhaustive routine was asked to exceed its configured cap."""


def resolve_cap(explicit: int | None, default: int) -> int:
    """Pick the cap for a brute-force routine.

    Priority: explicit argument, then the LSQLAB_MAX_EXHAUSTIVE environment
    variable, then the built-in default.
    """
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_CAP)
    if env is not None:
        return int(env)
    return default


def check_cap(what: str, size: int, explicit: int | None, default: int) -> None:
    cap = resolve_cap(explicit, default)
    if size > cap:
        raise CapabilityError(
            f"{what}: size {size} exceeds exhaustive cap {cap} "
            f"(raise via the cap argument or {ENV_CAP})"
        )
