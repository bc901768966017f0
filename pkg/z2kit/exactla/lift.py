"""Lifting invertible F_p matrices to unimodular integer matrices."""
from __future__ import annotations

import logging

from ._elementary import add_row_multiple
from ._exceptions import NotUnimodularError, ShapeMismatchError
from .matrix import FpMatrix, IntMatrix

logger = logging.getLogger(__name__)

# (target, source, coefficient): row_target += coefficient * row_source
Transvection = tuple[int, int, int]


def _reduce_to_diagonal(r: FpMatrix) -> tuple[list[Transvection], int]:
    p = r.p
    n = r.rows
    m = [list(row) for row in r.entries]
    ops: list[Transvection] = []

    def apply(target: int, source: int, coefficient: int) -> None:
        coefficient %= p
        if not coefficient:
            return
        rt, rs = m[target], m[source]
        for k in range(n):
            rt[k] = (rt[k] + coefficient * rs[k]) % p
        ops.append((target, source, coefficient))

    for c in range(n):
        if not m[c][c]:
            below = next((i for i in range(c + 1, n) if m[i][c]), None)
            if below is None:
                raise NotUnimodularError(message=f"Matrix is singular modulo {p}")
            apply(c, below, 1)
        if c < n - 1 and m[c][c] != 1:
            helper = next((i for i in range(c + 1, n) if m[i][c]), None)
            if helper is None:
                apply(c + 1, c, 1)
                helper = c + 1
            apply(c, helper, (1 - m[c][c]) * pow(m[helper][c], -1, p))
        inverse_pivot = pow(m[c][c], -1, p)
        for i in range(n):
            if i != c and m[i][c]:
                apply(i, c, -m[i][c] * inverse_pivot)
    delta = m[n - 1][n - 1] if n else 1
    return ops, delta


def lift_unimodular(r: FpMatrix) -> IntMatrix:
    """
    Lift ``r`` in ``GL_n(F_p)`` with ``det r = ±1`` to ``G`` in ``GL_n(Z)``.

    ``r`` is reduced to ``diag(1, ..., 1, det r)`` by transvections. Each
    transvection lifts to an integer elementary matrix, so undoing the
    reduction on ``diag(1, ..., 1, ±1)`` over Z gives ``G ≡ r (mod p)``.

    Args:
        r: Square matrix over F_p

    Returns:
        IntMatrix: ``G`` with ``|det G| = 1`` and ``G mod p == r``

    Raises:
        ShapeMismatchError: If ``r`` is not square
        NotUnimodularError: If ``r`` is singular or ``det r`` is not ±1 mod p
    """
    n, cols = r.shape
    if n != cols:
        raise ShapeMismatchError("lift_unimodular", r.shape, r.shape[::-1])
    ops, delta = _reduce_to_diagonal(r)
    if delta == 1:
        sign = 1
    elif delta == r.p - 1:
        sign = -1
    else:
        raise NotUnimodularError(
            det=delta, message=f"Determinant {delta} mod {r.p} is not ±1; no integer lift"
        )
    g = IntMatrix.diagonal([1] * (n - 1) + [sign]).to_lists() if n else []
    for target, source, coefficient in reversed(ops):
        add_row_multiple(g, target, source, -coefficient)
    logger.debug("lift_unimodular: %d transvections over F_%d", len(ops), r.p)
    return IntMatrix(g, n)
