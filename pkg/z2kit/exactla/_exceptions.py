"""Custom exceptions for the exact linear algebra layer."""
from __future__ import annotations

from .._exceptions import InputFormatError, InvalidInputError, Z2KitError


class ExactLAError(Z2KitError):
    """Base exception for all exact linear algebra errors."""


class ShapeMismatchError(ExactLAError, ValueError):
    """Raised when operand shapes are incompatible."""

    def __init__(self, operation: str, left: tuple[int, int], right: tuple[int, int] | int) -> None:
        self.operation = operation
        super().__init__(f"Shape mismatch in {operation}: {left} vs {right}")


class NotPrimitiveError(InvalidInputError, ExactLAError):
    """Raised when columns cannot be completed to a basis of Z^n."""

    def __init__(self, invariants: tuple[int, ...] | None = None, message: str | None = None) -> None:
        self.invariants = invariants or ()
        msg = message or (
            "Columns are not part of a Z-basis "
            f"(Smith invariants {list(self.invariants)})"
        )
        super().__init__(msg)


class DependentGeneratorsError(InvalidInputError, ExactLAError):
    """Raised when generators expected to be independent over F_p are dependent."""

    def __init__(self, rank: int, count: int) -> None:
        self.rank = rank
        self.count = count
        super().__init__(f"{count} generators span only a rank {rank} subspace")


class NotUnimodularError(InvalidInputError, ExactLAError):
    """Raised when an integer matrix was required to be invertible over Z."""

    def __init__(self, det: int | None = None, message: str | None = None) -> None:
        self.det = det
        msg = message or f"Matrix is not unimodular (det = {det})"
        super().__init__(msg)


class MatrixFormatError(InputFormatError, ExactLAError):
    """Raised when a matrix payload is malformed."""
