"""Splitting Z^n relative to a sublattice containing p Z^n."""
from __future__ import annotations

import logging
from typing import NamedTuple

from ..exactla import IntMatrix, ShapeMismatchError, complete_to_basis, snf, solve, solve_columns
from ._exceptions import ChainViolationError, DecompositionError
from .lift import lift_subspace_to_summand

logger = logging.getLogger(__name__)


class RelativeSplit(NamedTuple):
    """``Z^n = span(n0) ⊕ span(n1)`` and ``N = p span(n0) ⊕ span(n1)``."""

    n0: IntMatrix
    n1: IntMatrix


def split_relative(n: int, p: int, lattice: IntMatrix) -> RelativeSplit:
    """
    Split ``Z^n`` compatibly with a sublattice ``N`` where ``p Z^n ⊆ N``.

    ``N1`` lifts the image of ``N`` in ``(Z/p)^n`` to a direct summand and ``N0``
    completes it to a basis. The result is checked by the index identity
    ``[Z^n : N] = p^rank(N0)`` and membership of ``p N0`` and ``N1`` in ``N``.

    Args:
        n: Ambient rank
        p: Prime
        lattice: ``n x m`` generator matrix of ``N``

    Returns:
        RelativeSplit: ``(n0, n1)``

    Raises:
        ChainViolationError: If some ``p e_i`` is not in ``N``
        DecompositionError: If the verification of the split fails
    """
    if lattice.rows != n:
        raise ShapeMismatchError("split_relative", (n, n), lattice.shape)
    for i in range(n):
        target = [p if j == i else 0 for j in range(n)]
        if solve(lattice, target) is None:
            raise ChainViolationError(prime=p, index=i)

    n1 = lift_subspace_to_summand(n, p, lattice)
    basis = complete_to_basis(n1)
    n0 = basis.select_columns(range(n1.cols, n))

    form = snf(lattice)
    index = 1
    for d in form.invariants:
        index *= d
    if form.rank != n or index != p**n0.cols:
        raise DecompositionError(f"Index [Z^n : N] = {index} is not {p}^{n0.cols}")
    if solve_columns(lattice, n0.scale(p)) is None or solve_columns(lattice, n1) is None:
        raise DecompositionError("p*N0 + N1 is not contained in N")
    logger.debug("split_relative: n=%d p=%d rank N0=%d rank N1=%d", n, p, n0.cols, n1.cols)
    return RelativeSplit(n0, n1)
