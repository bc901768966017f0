"""Enums for Z[Z/2]-module summands."""
from __future__ import annotations

from enum import Enum


class SummandType(str, Enum):
    """The three indecomposable Z[Z/2]-modules that are free over Z."""

    T1 = "T1"  # Z, s acts as +1
    T2 = "T2"  # Z, s acts as -1
    T3 = "T3"  # Z[Z/2], s swaps 1 and s

    @property
    def rank(self) -> int:
        return 2 if self is SummandType.T3 else 1
