"""Integer kernels, saturation and primitivity tests."""
from __future__ import annotations

import logging

from .hnf import hnf
from .matrix import IntMatrix
from .snf import snf

logger = logging.getLogger(__name__)


def _canonical_columns(row_basis: IntMatrix) -> IntMatrix:
    # Lattice spanned by the rows, returned as columns in HNF order.
    form = hnf(row_basis)
    return form.h.select_rows(range(form.rank)).transpose()


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """
    Compute a Z-basis of ``{x : a @ x == 0}``.

    The basis is read off the transform of the HNF of ``a.T`` and returned in
    column Hermite form, so equal kernels give equal matrices.

    Args:
        a: An ``m x n`` integer matrix

    Returns:
        IntMatrix: ``n x k`` matrix whose columns form a saturated basis
    """
    form = hnf(a.transpose())
    n = a.cols
    kernel_rows = form.u.select_rows(range(form.rank, n))
    basis = _canonical_columns(kernel_rows) if kernel_rows.rows else IntMatrix.zeros(n, 0)
    logger.debug("kernel_basis: %dx%d matrix has nullity %d", a.rows, n, basis.cols)
    return basis


def saturate(b: IntMatrix) -> IntMatrix:
    """
    Return a basis of ``QB ∩ Z^n``, the saturation of the column lattice of ``b``.

    Args:
        b: An ``n x k`` integer matrix (columns may be dependent)

    Returns:
        IntMatrix: ``n x r`` basis in column Hermite form, ``r = rank(b)``
    """
    n = b.rows
    if b.cols == 0:
        return IntMatrix.zeros(n, 0)
    form = snf(b.transpose())
    if form.rank == 0:
        return IntMatrix.zeros(n, 0)
    v_inv = form.v.inverse()
    return _canonical_columns(v_inv.select_rows(range(form.rank)))


def is_primitive(w: IntMatrix) -> bool:
    """Whether the columns of ``w`` extend to a Z-basis (SNF of ``w`` is ``[I; 0]``)."""
    if w.cols == 0:
        return True
    form = snf(w)
    return form.rank == w.cols and all(x == 1 for x in form.diagonal)


def rank(a: IntMatrix) -> int:
    """Rank over Q of an integer matrix."""
    return hnf(a).rank
