"""Enums shared across the z2kit sub-packages."""
from __future__ import annotations

from enum import Enum


class OutputFormat(str, Enum):
    """Rendering of CLI reports."""

    TEXT = "text"
    JSON = "json"


class ExitCode(int, Enum):
    """Process exit statuses of the command-line front door."""

    OK = 0
    INPUT_ERROR = 1
    INVALID_INPUT = 2
    VERIFICATION_FAILED = 3
