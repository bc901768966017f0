"""Free Z[Z/2]-covers of presented groups."""
from __future__ import annotations

import logging

from ..exactla import IntMatrix, snf, solve_columns
from ._models import FreeCover, Presentation
from .validate import require_valid_presentation

logger = logging.getLogger(__name__)


def free_cover(p: Presentation) -> FreeCover:
    """
    Build the standard cover with one Z[Z/2]-generator per group generator.

    ``b_i`` maps to the i-th generator and ``s b_i`` to its image under gamma.

    Raises:
        InvalidPresentationError: If gamma is not an order-two automorphism
    """
    require_valid_presentation(p)
    g = p.generators
    identity = IntMatrix.identity(g)
    columns = []
    for i in range(g):
        columns.append(identity.column(i))
        columns.append(p.gamma.column(i))
    tau = IntMatrix.from_columns(columns, g)
    logger.debug("free_cover: rank %d cover of a group on %d generators", g, g)
    return FreeCover(rank=g, tau=tau)


def cover_is_surjective(p: Presentation, cover: FreeCover) -> bool:
    """Whether ``[tau | R]`` has trivial cokernel."""
    if cover.tau.rows != p.generators:
        return False
    form = snf(cover.tau.hstack(p.relations))
    return form.rank == p.generators and all(d == 1 for d in form.invariants)


def cover_is_equivariant(p: Presentation, cover: FreeCover) -> bool:
    """Whether ``tau σ ≡ gamma tau`` modulo relations (σ the action of s on N)."""
    if cover.tau.rows != p.generators or cover.tau.cols != 2 * cover.rank:
        return False
    difference = cover.tau @ cover.swap - p.gamma @ cover.tau
    return solve_columns(p.relations, difference) is not None
