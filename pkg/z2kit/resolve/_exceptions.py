"""Custom exceptions for presentations and resolution certificates."""
from __future__ import annotations

from .._exceptions import InputFormatError, InvalidInputError, Z2KitError


class ResolveError(Z2KitError):
    """Base exception for resolution errors."""


class InvalidPresentationError(InvalidInputError, ResolveError):
    """Raised when gamma does not define an order-two automorphism of the presented group."""

    default_message = "Gamma does not induce an order-two automorphism of the presented group"


class PresentationFormatError(InputFormatError, ResolveError):
    """Raised when a presentation payload is malformed."""
