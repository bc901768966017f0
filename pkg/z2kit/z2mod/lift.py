"""Lifting a subspace of (Z/p)^n to a direct summand of Z^n."""
from __future__ import annotations

import logging

from ..exactla import FpMatrix, IntMatrix, ShapeMismatchError, fp_span_basis, saturate
from ._exceptions import DecompositionError

logger = logging.getLogger(__name__)


def lift_subspace_to_summand(n: int, p: int, v: FpMatrix | IntMatrix) -> IntMatrix:
    """
    Find a direct summand ``L`` of ``Z^n`` whose reduction mod ``p`` is ``span(v)``.

    The reduced echelon basis of ``span(v)`` contains an identity block at its
    pivot rows, so its integer lift is already primitive; saturation puts it
    into Hermite form.

    Args:
        n: Ambient rank
        p: Prime modulus
        v: ``n x k`` spanning set of the subspace (an integer matrix is reduced mod ``p``)

    Returns:
        IntMatrix: ``n x dim V`` basis of ``L``

    Raises:
        ShapeMismatchError: If ``v`` does not have ``n`` rows
    """
    vp = v.mod(p) if isinstance(v, IntMatrix) else v
    if vp.rows != n:
        raise ShapeMismatchError("lift_subspace_to_summand", (n, n), vp.shape)
    basis = fp_span_basis(vp)
    if basis.cols == 0:
        return IntMatrix.zeros(n, 0)
    summand = saturate(basis.lift())
    if fp_span_basis(summand.mod(p)) != basis:
        raise DecompositionError("Reduction of the lifted summand differs from V")
    logger.debug("lift_subspace_to_summand: dim V = %d in (Z/%d)^%d", basis.cols, p, n)
    return summand
