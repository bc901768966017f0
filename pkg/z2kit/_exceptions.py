"""Global exceptions for the z2kit toolkit."""
from __future__ import annotations

from typing import Any

from ._enums import ExitCode


class Z2KitError(Exception):
    """Base exception for all z2kit errors."""

    default_message = "An error occurred in z2kit"
    default_exit_code = ExitCode.INPUT_ERROR

    def __init__(
        self,
        message: str | None = None,
        exit_code: int | None = None,
        errors: list[dict[str, Any]] | None = None,
    ) -> None:
        """Initialize the exception.

        Args:
            message: The error message
            exit_code: Process exit status the CLI should report
            errors: List of error details
        """
        self.message = message or self.default_message
        self.exit_code = int(exit_code if exit_code is not None else self.default_exit_code)
        self.errors = errors or []
        super().__init__(self.message)

    def __str__(self) -> str:
        """Return the string representation of the error."""
        return self.message


class InputFormatError(Z2KitError):
    """Raised when input cannot be read or parsed."""

    default_message = "Input could not be read or parsed"
    default_exit_code = ExitCode.INPUT_ERROR


class InvalidInputError(Z2KitError):
    """Raised when well-formed input violates a mathematical precondition."""

    default_message = "Input violates a mathematical precondition"
    default_exit_code = ExitCode.INVALID_INPUT


class VerificationFailedError(Z2KitError):
    """Raised when a verification report contains failed checks."""

    default_message = "Verification failed"
    default_exit_code = ExitCode.VERIFICATION_FAILED

    def __init__(self, message: str | None = None, failed: list[str] | None = None) -> None:
        self.failed = failed or []
        super().__init__(message, errors=[{"check": name} for name in self.failed])


class ConfigurationError(Z2KitError):
    """Raised when there is a configuration error."""

    default_message = "Configuration error"
    default_exit_code = ExitCode.INPUT_ERROR
