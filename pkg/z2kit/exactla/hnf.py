"""Row-style Hermite normal form with the unimodular transform."""
from __future__ import annotations

import logging
from typing import NamedTuple

from sympy.polys.domains import ZZ

from ._elementary import add_row_multiple, combine_rows, eye, negate_row, swap_rows
from .matrix import IntMatrix

logger = logging.getLogger(__name__)


class HermiteForm(NamedTuple):
    """Result of :func:`hnf`: ``u @ a == h``."""

    h: IntMatrix
    u: IntMatrix

    @property
    def rank(self) -> int:
        """Number of nonzero rows of ``h``."""
        return sum(1 for row in self.h.entries if any(row))

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot column of every nonzero row of ``h``."""
        return tuple(
            next(j for j, x in enumerate(row) if x) for row in self.h.entries if any(row)
        )


def hnf(a: IntMatrix) -> HermiteForm:
    """
    Compute the row-style Hermite normal form of an integer matrix.

    Rows are combined with extended-gcd steps so that each pivot becomes the
    gcd of its column below the current row. Pivots are made positive and
    entries above each pivot are reduced into ``[0, pivot)``.

    Args:
        a: Any integer matrix (empty shapes allowed)

    Returns:
        HermiteForm: ``(h, u)`` with ``u`` unimodular and ``u @ a == h``
    """
    m = a.to_lists()
    rows, cols = a.shape
    u = eye(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = [i for i in range(r, rows) if m[i][c]]
        if not nonzero:
            continue
        swap_rows(m, r, nonzero[0])
        swap_rows(u, r, nonzero[0])
        for i in range(r + 1, rows):
            below = m[i][c]
            if not below:
                continue
            pivot = m[r][c]
            x, y, g = (int(v) for v in ZZ.gcdex(ZZ(pivot), ZZ(below)))
            coeffs = (x, y, below // g, -(pivot // g))
            combine_rows(m, r, i, *coeffs)
            combine_rows(u, r, i, *coeffs)
        if m[r][c] < 0:
            negate_row(m, r)
            negate_row(u, r)
        pivot = m[r][c]
        for i in range(r):
            q = m[i][c] // pivot
            if q:
                add_row_multiple(m, i, r, -q)
                add_row_multiple(u, i, r, -q)
        r += 1
    logger.debug("hnf: %dx%d matrix has rank %d", rows, cols, r)
    return HermiteForm(IntMatrix(m, cols), IntMatrix(u, rows))
