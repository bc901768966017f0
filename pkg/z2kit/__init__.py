"""z2kit: Z[Z/2]-modules, their resolutions, and exact M_r ⊗ O_n arithmetic."""
from __future__ import annotations

from ._base import CheckResult, VerificationReport
from ._enums import ExitCode, OutputFormat
from ._exceptions import (
    ConfigurationError,
    InputFormatError,
    InvalidInputError,
    VerificationFailedError,
    Z2KitError,
)
from .config import Z2KitConfig, get_config

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ConfigurationError",
    "ExitCode",
    "InputFormatError",
    "InvalidInputError",
    "OutputFormat",
    "VerificationFailedError",
    "VerificationReport",
    "Z2KitConfig",
    "Z2KitError",
    "get_config",
    "__version__",
]
