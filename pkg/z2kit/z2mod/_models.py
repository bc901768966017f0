from __future__ import annotations

from typing import Any

from pydantic import Field, field_validator, model_validator

from .._base import Z2KitModel
from ..exactla import IntMatrix, MatrixFormatError
from ._enums import SummandType


class Involution(Z2KitModel):
    """A free Z-module of rank ``n`` with the action ``s`` of the generator of Z/2.

    ``s @ s == I`` is not enforced here; operations that need it raise
    ``NotInvolutionError``.
    """

    s: IntMatrix = Field(..., alias="S", description="Square action matrix")

    @field_validator("s", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> IntMatrix:
        if isinstance(value, IntMatrix):
            return value
        if isinstance(value, dict):
            return IntMatrix.from_payload(value)
        return IntMatrix.from_rows(value)

    @model_validator(mode="after")
    def check_square(self) -> Involution:
        if not self.s.is_square:
            raise ValueError(f"involution matrix must be square, got {self.s.shape}")
        return self

    @property
    def n(self) -> int:
        return self.s.rows

    @property
    def is_involution(self) -> bool:
        return self.s @ self.s == IntMatrix.identity(self.n)

    @classmethod
    def from_matrix(cls, s: IntMatrix) -> Involution:
        return cls(S=s)

    @classmethod
    def from_payload(cls, payload: Any) -> Involution:
        """Parse a square matrix in the shared JSON shape."""
        matrix = IntMatrix.from_payload(payload)
        if not matrix.is_square:
            raise MatrixFormatError(f"Involution matrix must be square, got {matrix.rows}x{matrix.cols}")
        return cls(S=matrix)


class Multiplicities(Z2KitModel):
    """Counts of T1, T2 and T3 summands."""

    n1: int = Field(..., ge=0, description="Number of trivial rank-one summands")
    n2: int = Field(..., ge=0, description="Number of sign rank-one summands")
    n3: int = Field(..., ge=0, description="Number of free rank-two summands")

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + 2 * self.n3

    @property
    def trace(self) -> int:
        return self.n1 - self.n2

    def summands(self) -> list[SummandType]:
        """Summand types in canonical block order."""
        return [SummandType.T1] * self.n1 + [SummandType.T2] * self.n2 + [SummandType.T3] * self.n3

    def to_payload(self) -> dict[str, int]:
        return {"n1": self.n1, "n2": self.n2, "n3": self.n3}

    def __str__(self) -> str:
        return f"n1={self.n1} n2={self.n2} n3={self.n3}"


class Decomposition(Z2KitModel):
    """Multiplicities together with a basis realizing the canonical form.

    Columns of ``p`` are the new basis: ``n1`` T1 vectors, ``n2`` T2 vectors,
    then ``n3`` pairs ``(x, S x)``.
    """

    mult: Multiplicities
    p: IntMatrix = Field(..., alias="P", description="Change of basis, columns are the new basis")

    def to_payload(self) -> dict[str, Any]:
        return {**self.mult.to_payload(), "P": self.p.to_payload()}

    def summand_columns(self) -> list[tuple[SummandType, tuple[int, ...]]]:
        """Column indices of ``p`` belonging to each summand, in order."""
        out: list[tuple[SummandType, tuple[int, ...]]] = []
        col = 0
        for kind in self.mult.summands():
            out.append((kind, tuple(range(col, col + kind.rank))))
            col += kind.rank
        return out
