"""Custom exceptions for integer involution decomposition."""
from __future__ import annotations

from .._exceptions import InvalidInputError, VerificationFailedError, Z2KitError


class Z2ModError(Z2KitError):
    """Base exception for Z[Z/2]-module errors."""


class NotInvolutionError(InvalidInputError, Z2ModError):
    """Raised when a matrix does not square to the identity."""

    default_message = "Matrix is not an involution (S @ S != I)"


class ChainViolationError(InvalidInputError, Z2ModError):
    """Raised when a sublattice does not contain p times the ambient lattice."""

    def __init__(self, prime: int, index: int) -> None:
        self.prime = prime
        self.index = index
        super().__init__(f"{prime}*e{index + 1} is not in the sublattice (p*Z^n is not contained in N)")


class DecompositionError(VerificationFailedError, Z2ModError):
    """Raised when a computed decomposition fails its own verification."""

    default_message = "Could not produce a verified decomposition"
