"""Immutable exact matrices over Z and over F_p.

``IntMatrix`` is the value type every lattice computation in z2kit runs on.
Entries are Python integers (arbitrary precision); every operation returns a
fresh matrix. Determinants and finite-field row reduction are delegated to
sympy's ``DomainMatrix``.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Any, overload

from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from ._exceptions import MatrixFormatError, NotUnimodularError, ShapeMismatchError

Vector = tuple[int, ...]


class IntMatrix:
    """Exact integer matrix stored row-major as a tuple of tuples."""

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None) -> None:
        data = tuple(tuple(int(x) for x in row) for row in rows)
        width = len(data[0]) if data else (cols or 0)
        if cols is not None and data and width != cols:
            raise MatrixFormatError(f"Expected {cols} columns, got {width}")
        if any(len(row) != width for row in data):
            raise MatrixFormatError("Ragged rows in integer matrix")
        self._rows = len(data)
        self._cols = width
        self._data = data

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> IntMatrix:
        """Build a matrix from its rows (``cols`` is needed for 0-row matrices)."""
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int) -> IntMatrix:
        """Build a ``rows``-row matrix whose columns are the given vectors."""
        cols = [tuple(c) for c in columns]
        if any(len(c) != rows for c in cols):
            raise MatrixFormatError(f"Every column must have {rows} entries")
        return cls(([c[i] for c in cols] for i in range(rows)), len(cols))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(([0] * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([1 if i == j else 0 for j in range(n)] for i in range(n)), n)

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(([entries[i] if i == j else 0 for j in range(n)] for i in range(n)), n)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[IntMatrix]) -> IntMatrix:
        """Assemble square or rectangular blocks along the diagonal."""
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block.entries):
                out[r0 + i][c0 : c0 + block.cols] = row
            r0 += block.rows
            c0 += block.cols
        return cls(out, cols)

    # -- accessors --------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def entries(self) -> tuple[Vector, ...]:
        return self._data

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self._cols)]

    def select_columns(self, indices: Iterable[int]) -> IntMatrix:
        idx = list(indices)
        return IntMatrix(([row[j] for j in idx] for row in self._data), len(idx))

    def select_rows(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix((self._data[i] for i in indices), self._cols)

    def to_lists(self) -> list[list[int]]:
        """Mutable copy of the entries, for in-place algorithms."""
        return [list(row) for row in self._data]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._data[i][j]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._data)

    # -- arithmetic -------------------------------------------------------

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._data), self._rows) if self._rows else IntMatrix.zeros(self._cols, 0)

    @property
    def T(self) -> IntMatrix:  # noqa: N802
        return self.transpose()

    @overload
    def __matmul__(self, other: IntMatrix) -> IntMatrix: ...

    @overload
    def __matmul__(self, other: Sequence[int]) -> Vector: ...

    def __matmul__(self, other: Any) -> Any:
        if isinstance(other, IntMatrix):
            if self._cols != other._rows:
                raise ShapeMismatchError("matmul", self.shape, other.shape)
            other_cols = other.columns()
            return IntMatrix(
                ([sum(a * b for a, b in zip(row, col)) for col in other_cols] for row in self._data),
                other._cols,
            )
        vec = tuple(other)
        if len(vec) != self._cols:
            raise ShapeMismatchError("matvec", self.shape, len(vec))
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def _elementwise(self, other: IntMatrix, sign: int, operation: str) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(operation, self.shape, other.shape)
        return IntMatrix(
            ([a + sign * b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)),
            self._cols,
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        return self._elementwise(other, 1, "add")

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self._elementwise(other, -1, "sub")

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, factor: int) -> IntMatrix:
        return IntMatrix(([factor * x for x in row] for row in self._data), self._cols)

    def __rmul__(self, factor: int) -> IntMatrix:
        if not isinstance(factor, int):
            return NotImplemented
        return self.scale(factor)

    def hstack(self, *others: IntMatrix) -> IntMatrix:
        cols = self._cols
        data = [list(row) for row in self._data]
        for other in others:
            if other._rows != self._rows:
                raise ShapeMismatchError("hstack", self.shape, other.shape)
            for row, extra in zip(data, other._data):
                row.extend(extra)
            cols += other._cols
        return IntMatrix(data, cols)

    def vstack(self, *others: IntMatrix) -> IntMatrix:
        data = list(self._data)
        for other in others:
            if other._cols != self._cols:
                raise ShapeMismatchError("vstack", self.shape, other.shape)
            data.extend(other._data)
        return IntMatrix(data, self._cols)

    def trace(self) -> int:
        if not self.is_square:
            raise ShapeMismatchError("trace", self.shape, self.shape[::-1])
        return sum(self._data[i][i] for i in range(self._rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self._data], self.shape, ZZ)

    def det(self) -> int:
        """Exact determinant (1 for the empty matrix)."""
        if not self.is_square:
            raise ShapeMismatchError("det", self.shape, self.shape[::-1])
        if self._rows == 0:
            return 1
        return int(self.to_domain().det())

    def rank(self) -> int:
        from .hnf import hnf

        return hnf(self).rank

    def is_unimodular(self) -> bool:
        return self.is_square and abs(self.det()) == 1

    def inverse(self) -> IntMatrix:
        """Inverse over Z of a unimodular matrix.

        Raises:
            NotUnimodularError: If the matrix is singular or |det| != 1.
        """
        from .hnf import hnf

        if not self.is_square:
            raise NotUnimodularError(message=f"Non-square {self.shape} matrix has no inverse")
        form = hnf(self)
        if form.h != IntMatrix.identity(self._rows):
            raise NotUnimodularError(det=self.det())
        return form.u

    def mod(self, p: int) -> FpMatrix:
        if p == 2:
            return F2Matrix(self._data, self._cols)
        return FpMatrix(self._data, p, self._cols)

    def to_payload(self) -> dict[str, Any]:
        """Shared JSON shape ``{"rows", "cols", "entries"}`` with decimal-string entries."""
        from ._models import MatrixPayload

        return MatrixPayload.from_matrix(self).model_dump()

    @classmethod
    def from_payload(cls, payload: Any) -> IntMatrix:
        """
        Parse the shared JSON matrix shape.

        Raises:
            MatrixFormatError: If the payload is malformed
        """
        from ._models import MatrixPayload

        return MatrixPayload.parse(payload).to_matrix()

    # -- identity / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._data]!r}, cols={self._cols})"

    def __str__(self) -> str:
        if not self._rows or not self._cols:
            return f"[] ({self._rows}x{self._cols})"
        width = max(len(str(x)) for row in self._data for x in row)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self._data)


class FpMatrix:
    """Matrix over the prime field F_p, entries stored in ``range(p)``."""

    __slots__ = ("_p", "_rows", "_cols", "_data")

    def __init__(self, rows: Iterable[Iterable[int]], p: int, cols: int | None = None) -> None:
        if p < 2:
            raise MatrixFormatError(f"Modulus must be a prime, got {p}")
        data = tuple(tuple(int(x) % p for x in row) for row in rows)
        width = len(data[0]) if data else (cols or 0)
        if any(len(row) != width for row in data):
            raise MatrixFormatError("Ragged rows in F_p matrix")
        self._p = p
        self._rows = len(data)
        self._cols = width
        self._data = data

    @property
    def p(self) -> int:
        return self._p

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def entries(self) -> tuple[Vector, ...]:
        return self._data

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self._cols)]

    def transpose(self) -> FpMatrix:
        if not self._rows:
            return type(self)._like(self, [[] for _ in range(self._cols)], 0)
        return type(self)._like(self, zip(*self._data), self._rows)

    def hstack(self, other: FpMatrix) -> FpMatrix:
        if other._rows != self._rows or other._p != self._p:
            raise ShapeMismatchError("hstack", self.shape, other.shape)
        return type(self)._like(
            self, (a + b for a, b in zip(self._data, other._data)), self._cols + other._cols
        )

    def lift(self) -> IntMatrix:
        """Integer matrix with the representatives in ``range(p)``."""
        return IntMatrix(self._data, self._cols)

    def to_domain(self) -> DomainMatrix:
        field = GF(self._p)
        return DomainMatrix([[field(x) for x in row] for row in self._data], self.shape, field)

    @classmethod
    def _like(cls, template: FpMatrix, rows: Iterable[Iterable[int]], cols: int) -> FpMatrix:
        return FpMatrix(rows, template._p, cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self._p == other._p and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._p, self.shape, self._data))

    def __repr__(self) -> str:
        return f"FpMatrix({[list(r) for r in self._data]!r}, p={self._p}, cols={self._cols})"


class F2Matrix(FpMatrix):
    """Matrix over F_2."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None) -> None:
        super().__init__(rows, 2, cols)

    @classmethod
    def _like(cls, template: FpMatrix, rows: Iterable[Iterable[int]], cols: int) -> FpMatrix:
        return F2Matrix(rows, cols)

    @classmethod
    def from_int(cls, matrix: IntMatrix) -> F2Matrix:
        return cls(matrix.entries, matrix.cols)

    def __repr__(self) -> str:
        return f"F2Matrix({[list(r) for r in self.entries]!r}, cols={self.cols})"
