"""Smith normal form with both unimodular transforms."""
from __future__ import annotations

import logging
from typing import NamedTuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .matrix import IntMatrix

logger = logging.getLogger(__name__)


class SmithForm(NamedTuple):
    """Result of :func:`snf`: ``u @ a @ v == d``."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        """The ``min(rows, cols)`` diagonal entries of ``d``."""
        return tuple(self.d[i, i] for i in range(min(self.d.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)

    @property
    def invariants(self) -> tuple[int, ...]:
        """Nonzero invariant factors ``d1 | d2 | ...``."""
        return tuple(x for x in self.diagonal if x)


def _to_int(m: DomainMatrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.to_list()]


def snf(a: IntMatrix) -> SmithForm:
    """
    Compute the Smith normal form of an integer matrix.

    The decomposition comes from sympy's ``smith_normal_decomp`` over ``ZZ``;
    the result is brought back to :class:`IntMatrix` with the diagonal made
    non-negative.

    Args:
        a: Any integer matrix (empty shapes allowed)

    Returns:
        SmithForm: ``(d, u, v)`` with ``u``, ``v`` unimodular, ``u @ a @ v == d``
        and the diagonal non-negative with ``d1 | d2 | ...``
    """
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        form = SmithForm(
            IntMatrix.zeros(rows, cols), IntMatrix.identity(rows), IntMatrix.identity(cols)
        )
        logger.debug("snf: empty %dx%d matrix", rows, cols)
        return form
    smf, s, t = smith_normal_decomp(a.to_domain())
    d = _to_int(smf)
    u = _to_int(s)
    for i in range(min(rows, cols)):
        if d[i][i] < 0:
            d[i][i] = -d[i][i]
            u[i] = [-x for x in u[i]]
    result = SmithForm(IntMatrix(d, cols), IntMatrix(u, rows), IntMatrix(_to_int(t), cols))
    logger.debug("snf: %dx%d matrix has invariants %s", rows, cols, result.invariants)
    return result
