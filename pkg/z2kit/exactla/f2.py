"""Row reduction, rank and complements over F_p (F_2 being the common case)."""
from __future__ import annotations

import logging

from ._exceptions import DependentGeneratorsError
from .matrix import F2Matrix, FpMatrix

logger = logging.getLogger(__name__)


def _rref(a: FpMatrix) -> tuple[FpMatrix, tuple[int, ...]]:
    if a.rows == 0 or a.cols == 0:
        return a, ()
    reduced, pivots = a.to_domain().rref()
    entries = [[int(x) % a.p for x in row] for row in reduced.to_list()]
    return type(a)._like(a, entries, a.cols), tuple(pivots)


def fp_row_reduce(a: FpMatrix) -> FpMatrix:
    """Reduced row echelon form over F_p."""
    return _rref(a)[0]


def fp_rank(a: FpMatrix) -> int:
    """Rank over F_p."""
    return len(_rref(a)[1])


def fp_span_basis(v: FpMatrix) -> FpMatrix:
    """Basis (as columns, in reduced form) of the span of the columns of ``v``."""
    reduced, pivots = _rref(v.transpose())
    basis = [reduced.entries[i] for i in range(len(pivots))]
    return type(v)._like(v, ([b[i] for b in basis] for i in range(v.rows)), len(basis))


def fp_complement(v: FpMatrix) -> FpMatrix:
    """
    Choose standard basis vectors spanning a complement of ``span(v)``.

    Args:
        v: ``n x k`` matrix with independent columns

    Returns:
        FpMatrix: ``n x (n - k)`` matrix ``w`` with ``span(v) ⊕ span(w) = F_p^n``

    Raises:
        DependentGeneratorsError: If the columns of ``v`` are dependent
    """
    n, k = v.shape
    _, pivots = _rref(v.transpose())
    if len(pivots) < k:
        raise DependentGeneratorsError(rank=len(pivots), count=k)
    free = [j for j in range(n) if j not in pivots]
    columns = [[1 if i == j else 0 for i in range(n)] for j in free]
    logger.debug("fp_complement: dim V = %d, complement spanned by e%s", k, free)
    return type(v)._like(v, ([c[i] for c in columns] for i in range(n)), len(free))


def f2_row_reduce(a: F2Matrix) -> F2Matrix:
    """Reduced row echelon form over F_2."""
    return F2Matrix.from_int(fp_row_reduce(a).lift())


def f2_rank(a: F2Matrix) -> int:
    """Rank over F_2."""
    return fp_rank(a)


def f2_complement(v: F2Matrix) -> F2Matrix:
    """Complement of ``span(v)`` in ``F_2^n``; see :func:`fp_complement`."""
    return F2Matrix.from_int(fp_complement(v).lift())
