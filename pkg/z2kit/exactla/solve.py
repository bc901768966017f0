"""Integer linear systems."""
from __future__ import annotations

from collections.abc import Sequence

from ._exceptions import ShapeMismatchError
from .matrix import IntMatrix, Vector
from .snf import SmithForm, snf


def _solve_with(form: SmithForm, b: Sequence[int]) -> Vector | None:
    d, u, v = form
    c = u @ b
    r = form.rank
    y = [0] * v.rows
    for i in range(len(c)):
        if i < r:
            q, rem = divmod(c[i], d[i, i])
            if rem:
                return None
            y[i] = q
        elif c[i]:
            return None
    return v @ y


def solve(a: IntMatrix, b: Sequence[int]) -> Vector | None:
    """
    Find an integer solution of ``a @ x == b``.

    Args:
        a: Coefficient matrix
        b: Right-hand side with ``a.rows`` entries

    Returns:
        Optional[Vector]: Some solution, or ``None`` when no integer solution exists

    Raises:
        ShapeMismatchError: If ``len(b) != a.rows``
    """
    if len(b) != a.rows:
        raise ShapeMismatchError("solve", a.shape, len(b))
    return _solve_with(snf(a), b)


def solve_columns(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """
    Solve ``a @ x == b`` column by column with one factorization.

    Returns:
        Optional[IntMatrix]: ``a.cols x b.cols`` solution, or ``None`` if any column fails
    """
    if b.rows != a.rows:
        raise ShapeMismatchError("solve", a.shape, b.shape)
    form = snf(a)
    solutions = []
    for column in b.columns():
        x = _solve_with(form, column)
        if x is None:
            return None
        solutions.append(x)
    return IntMatrix.from_columns(solutions, a.cols)


def in_column_span(a: IntMatrix, b: Sequence[int]) -> bool:
    """Whether ``b`` lies in the lattice spanned by the columns of ``a``."""
    return solve(a, b) is not None
