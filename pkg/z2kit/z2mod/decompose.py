"""
Decomposition of an integer involution into T1, T2 and T3 summands.
"""
from __future__ import annotations

import logging
import random

from ..config import get_config
from ..exactla import (
    IntMatrix,
    NotUnimodularError,
    kernel_basis,
    lift_unimodular,
    saturate,
    solve_columns,
)
from ._exceptions import DecompositionError
from ._models import Decomposition, Involution, Multiplicities
from .multiplicities import multiplicities, require_involution
from .split import split_relative
from .verify import verify_decomposition

logger = logging.getLogger(__name__)


def _eigen_split(s: IntMatrix, sign: int) -> tuple[IntMatrix, IntMatrix]:
    """Split ``ker(S - sign I)`` against the image of ``I + sign S``.

    Returns the rank-one summand vectors and the vectors feeding the free part.
    """
    n = s.rows
    identity = IntMatrix.identity(n)
    kernel = kernel_basis(s - identity.scale(sign))
    image = identity + s.scale(sign)
    coords = solve_columns(kernel, image)
    if coords is None:
        raise DecompositionError("Image of I ± S is not contained in the eigenlattice")
    split = split_relative(kernel.cols, 2, coords)
    return kernel @ split.n0, kernel @ split.n1


def _pair_generators(s_free: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Generators ``x_i`` of a free part with their repair direction.

    Returns ``x`` (columns) and the basis of ``ker(S_N + I)`` used to repair it.
    """
    m = s_free.rows
    identity = IntMatrix.identity(m)
    fixed = kernel_basis(s_free - identity)
    anti = kernel_basis(s_free + identity)
    x = solve_columns(identity + s_free, fixed)
    if x is None:
        raise DecompositionError("Free part is not free: (I + S)N is smaller than ker(S - I)")
    d = solve_columns(anti, (identity - s_free) @ x)
    if d is None:
        raise DecompositionError("(I - S)N is not contained in ker(S + I)")
    try:
        d_lift = lift_unimodular(d.mod(2))
    except NotUnimodularError as e:
        raise DecompositionError("Pair coordinates are singular modulo 2") from e
    correction = IntMatrix(([(a - b) // 2 for a, b in zip(r1, r2)] for r1, r2 in zip(d_lift, d)), d.cols)
    return x + anti @ correction, anti


def _assemble(s: IntMatrix, rank_one: IntMatrix, free_basis: IntMatrix, x: IntMatrix) -> IntMatrix:
    s_free = solve_columns(free_basis, s @ free_basis)
    if s_free is None:
        raise DecompositionError("Free part is not invariant under S")
    pair_columns = []
    for column in x.columns():
        pair_columns.append(free_basis @ column)
        pair_columns.append(free_basis @ (s_free @ column))
    pairs = IntMatrix.from_columns(pair_columns, s.rows)
    return rank_one.hstack(pairs)


def _search_pairs(
    inv: Involution,
    mult: Multiplicities,
    rank_one: IntMatrix,
    free_basis: IntMatrix,
    x: IntMatrix,
    anti: IntMatrix,
    seed: int,
    attempts: int,
) -> IntMatrix | None:
    rng = random.Random(seed)
    k = x.cols
    for attempt in range(attempts):
        step = IntMatrix([[rng.randint(-2, 2) for _ in range(k)] for _ in range(anti.cols)], k)
        candidate = _assemble(inv.s, rank_one, free_basis, x + anti @ step)
        if verify_decomposition(inv, Decomposition(mult=mult, P=candidate)):
            logger.info("decompose: repair search succeeded after %d attempts", attempt + 1)
            return candidate
    return None


def decompose(
    inv: Involution,
    seed: int = 0,
    repair_attempts: int | None = None,
) -> Decomposition:
    """
    Decompose an involution into canonical summands.

    The eigenlattices ``ker(S ∓ I)`` are split relative to the images of
    ``I ± S``; the parts not reached by the images give the T1 and T2
    summands. The remaining vectors span a free part ``N``, where generators
    ``x_i`` with ``(I + S) x_i`` running over a basis of the fixed vectors are
    corrected along ``ker(S + I)`` until ``{x_i, S x_i}`` is a basis of ``N``.

    Args:
        inv: The involution
        seed: Seed of the fallback search over small corrections
        repair_attempts: Budget of that search (config default when omitted)

    Returns:
        Decomposition: Verified multiplicities and change of basis

    Raises:
        NotInvolutionError: If ``S @ S != I``
        DecompositionError: If no verified basis could be produced
    """
    require_involution(inv)
    n = inv.n
    mult = multiplicities(inv)
    if n == 0:
        return Decomposition(mult=mult, P=IntMatrix.zeros(0, 0))
    s = inv.s

    t1, p1 = _eigen_split(s, 1)
    t2, q1 = _eigen_split(s, -1)
    rank_one = t1.hstack(t2)
    free_basis = saturate(p1.hstack(q1))
    logger.debug("decompose: %d rank-one vectors, free part of rank %d", rank_one.cols, free_basis.cols)

    if free_basis.cols != 2 * mult.n3:
        raise DecompositionError(f"Free part has rank {free_basis.cols}, expected {2 * mult.n3}")
    if mult.n3:
        s_free = solve_columns(free_basis, s @ free_basis)
        if s_free is None:
            raise DecompositionError("Free part is not invariant under S")
        x, anti = _pair_generators(s_free)
    else:
        x, anti = IntMatrix.zeros(0, 0), IntMatrix.zeros(0, 0)

    candidate = _assemble(s, rank_one, free_basis, x)
    result = Decomposition(mult=mult, P=candidate)
    if verify_decomposition(inv, result):
        return result

    attempts = get_config().repair_attempts if repair_attempts is None else repair_attempts
    logger.warning("decompose: direct construction failed verification, searching (seed=%d)", seed)
    found = _search_pairs(inv, mult, rank_one, free_basis, x, anti, seed, attempts) if mult.n3 else None
    if found is None:
        raise DecompositionError(f"No verified decomposition after {attempts} repair attempts")
    return Decomposition(mult=mult, P=found)
