"""Enumeration size limits.

Exhaustive enumeration of signed independent sets is exponential, so every
entry point that enumerates takes an optional explicit limit and otherwise
falls back to a process-wide default that the SGFRAC_MAX_VERTICES
environment variable can override.
"""

from __future__ import annotations

import os

DEFAULT_MAX_VERTICES = 20

ENV_VAR = "SGFRAC_MAX_VERTICES"


def vertex_limit(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_MAX_VERTICES
