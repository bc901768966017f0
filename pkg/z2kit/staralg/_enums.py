"""Enums for the *-algebra engine."""
from __future__ import annotations

from enum import Enum


class Mutation(str, Enum):
    """Single-generator edits of the built-in table, used to test the verifier."""

    SWAP_V2_V3 = "swap-v2-v3"
    NEGATE_V1 = "negate-v1"
    ZERO_V1 = "zero-v1"
    NEGATE_F12 = "negate-f12"
    SWAP_F22_F33 = "swap-f22-f33"


class BuiltinMap(str, Enum):
    """Generator maps shipped with the package."""

    EXAMPLE5 = "example5"
