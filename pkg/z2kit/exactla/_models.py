from __future__ import annotations

from typing import Any

from pydantic import Field, ValidationError, field_validator, model_validator

from .._base import Z2KitModel
from ._exceptions import MatrixFormatError
from .matrix import IntMatrix


class MatrixPayload(Z2KitModel):
    """JSON form of an integer matrix shared by every command."""

    rows: int = Field(..., ge=0, description="Number of rows")
    cols: int = Field(..., ge=0, description="Number of columns")
    entries: list[list[str]] = Field(
        ..., description="Row-major entries as decimal strings (arbitrary precision)"
    )

    @field_validator("entries", mode="before")
    @classmethod
    def entries_as_decimal_strings(cls, value: Any) -> Any:
        if not isinstance(value, list):
            return value
        out = []
        for row in value:
            if not isinstance(row, list):
                raise ValueError("each row must be a list")
            converted = []
            for x in row:
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    raise ValueError(f"entry {x!r} is not an integer")
                text = str(x).strip()
                try:
                    int(text)
                except ValueError:
                    raise ValueError(f"entry {x!r} is not a decimal integer") from None
                converted.append(text)
            out.append(converted)
        return out

    @model_validator(mode="after")
    def check_shape(self) -> MatrixPayload:
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.cols}")
        return self

    @classmethod
    def parse(cls, payload: Any) -> MatrixPayload:
        try:
            return cls.model_validate(payload)
        except ValidationError as e:
            raise MatrixFormatError(
                f"Invalid matrix payload: {e.errors(include_url=False)[0]['msg']}",
                errors=e.errors(include_url=False),
            ) from e

    @classmethod
    def from_matrix(cls, matrix: IntMatrix) -> MatrixPayload:
        return cls(
            rows=matrix.rows,
            cols=matrix.cols,
            entries=[[str(x) for x in row] for row in matrix.entries],
        )

    def to_matrix(self) -> IntMatrix:
        return IntMatrix(([int(x) for x in row] for row in self.entries), self.cols)
