"""The kernel of a free cover as a Z[Z/2]-module."""
from __future__ import annotations

import logging

from ..exactla import hnf, kernel_basis, solve_columns
from ..z2mod import Involution
from ._exceptions import InvalidPresentationError
from ._models import FreeCover, KernelModule, Presentation

logger = logging.getLogger(__name__)


def kernel_module(p: Presentation, cover: FreeCover) -> KernelModule:
    """
    Compute ``M = ker(N -> G)`` and the involution induced on it.

    ``M`` is the projection onto N-coordinates of ``ker [tau | R]``; its basis
    is the row Hermite form of those projections, so the embedding is
    deterministic. The induced involution solves ``E S_M = σ E``.

    Args:
        p: The presentation
        cover: A cover of ``p``

    Returns:
        KernelModule: Involution on M and the ``2 rank x m`` embedding ``E``

    Raises:
        InvalidPresentationError: If M is not stable under s (the cover is not equivariant)
    """
    size = 2 * cover.rank
    stacked = cover.tau.hstack(p.relations)
    generators = kernel_basis(stacked).select_rows(range(size))
    form = hnf(generators.transpose())
    embedding = form.h.select_rows(range(form.rank)).transpose()
    s_m = solve_columns(embedding, cover.swap @ embedding)
    if s_m is None:
        raise InvalidPresentationError("Kernel of the cover is not stable under s")
    logger.debug("kernel_module: M has rank %d inside N of rank %d", embedding.cols, size)
    return KernelModule(involution=Involution(S=s_m), embedding=embedding)
