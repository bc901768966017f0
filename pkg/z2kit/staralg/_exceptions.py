"""Custom exceptions for the *-algebra engine."""
from __future__ import annotations

from .._exceptions import InputFormatError, InvalidInputError, Z2KitError


class StarAlgError(Z2KitError):
    """Base exception for *-algebra errors."""


class ExpressionSyntaxError(InputFormatError, StarAlgError):
    """Raised when an expression does not conform to the grammar."""

    def __init__(self, message: str, position: int, text: str | None = None) -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class GeneratorIndexError(InvalidInputError, StarAlgError, IndexError):
    """Raised when a matrix-unit or isometry index is out of range."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class DimensionMismatchError(InvalidInputError, StarAlgError):
    """Raised when operands live in different algebras M_r ⊗ O_n."""

    def __init__(self, left: tuple[int, int], right: tuple[int, int]) -> None:
        self.left = left
        self.right = right
        super().__init__(
            f"Operands live in M_{left[0]} ⊗ O_{left[1]} and M_{right[0]} ⊗ O_{right[1]}"
        )


class TermCapExceededError(InvalidInputError, StarAlgError):
    """Raised when normalization would produce more terms than allowed."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"Normalization exceeded the term cap of {cap}")


class GeneratorMapError(InputFormatError, StarAlgError):
    """Raised when a generator map is missing images or has unknown generators."""


class FockWindowError(InvalidInputError, StarAlgError, ValueError):
    """Raised when a Fock window is too short for the words it must represent."""

    def __init__(self, length: int, required: int, what: str = "input length") -> None:
        self.length = length
        self.required = required
        super().__init__(f"Fock window {what} {length} is below the required {required}")
