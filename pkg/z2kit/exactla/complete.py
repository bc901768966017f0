"""Basis completion for primitive column sets."""
from __future__ import annotations

import logging

from ._exceptions import NotPrimitiveError
from .matrix import IntMatrix
from .snf import snf

logger = logging.getLogger(__name__)


def complete_to_basis(w: IntMatrix) -> IntMatrix:
    """
    Extend the columns of ``w`` to a Z-basis of ``Z^n``.

    With ``u @ w @ v == [I; 0]`` the trailing columns of ``u^-1`` complete ``w``:
    ``[w | u^-1[:, k:]] == u^-1 @ diag(v^-1, I)``.

    Args:
        w: ``n x k`` matrix whose columns should be part of a basis

    Returns:
        IntMatrix: Unimodular ``n x n`` matrix whose first ``k`` columns equal ``w``

    Raises:
        NotPrimitiveError: If the Smith form of ``w`` is not ``[I; 0]``
    """
    n, k = w.shape
    form = snf(w)
    if form.rank != k or any(x != 1 for x in form.diagonal):
        raise NotPrimitiveError(invariants=form.diagonal)
    u_inv = form.u.inverse()
    completed = w.hstack(u_inv.select_columns(range(k, n)))
    logger.debug("complete_to_basis: extended %d columns to a basis of Z^%d", k, n)
    return completed
