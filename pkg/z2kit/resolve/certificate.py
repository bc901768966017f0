"""
Resolution certificates: cover, kernel decomposition and summand exponent tuples.
"""
from __future__ import annotations

import logging

from ..exactla import Vector
from ..z2mod import SummandType, decompose
from ._models import (
    GradedCertificate,
    GradedPresentation,
    Presentation,
    ResolutionCertificate,
    SummandTuple,
)
from .cover import free_cover
from .kernel import kernel_module

logger = logging.getLogger(__name__)


def summand_tuple(kind: SummandType, generator: Vector) -> SummandTuple:
    """Read ``generator`` in N-coordinates as ``(k_1 + l_1 s, k_2 + l_2 s, ...)``."""
    return SummandTuple(
        kind=kind,
        k=tuple(generator[0::2]),
        l=tuple(generator[1::2]),
        generator=tuple(generator),
    )


def certificate(
    p: Presentation,
    seed: int = 0,
    repair_attempts: int | None = None,
) -> ResolutionCertificate:
    """
    Resolve a presentation and record the data of every kernel summand.

    Args:
        p: The presentation
        seed: Seed forwarded to the decomposition of the kernel
        repair_attempts: Search budget forwarded to the decomposition

    Returns:
        ResolutionCertificate: Cover, kernel, its decomposition and the summand tuples

    Raises:
        InvalidPresentationError: If gamma is not an order-two automorphism
    """
    cover = free_cover(p)
    kernel = kernel_module(p, cover)
    dec = decompose(kernel.involution, seed=seed, repair_attempts=repair_attempts)
    generators = kernel.embedding @ dec.p
    summands = [
        summand_tuple(kind, generators.column(columns[0]))
        for kind, columns in dec.summand_columns()
    ]
    logger.debug("certificate: kernel multiplicities %s", dec.mult)
    return ResolutionCertificate(
        presentation=p,
        cover=cover,
        kernel=kernel,
        decomposition=dec,
        summands=summands,
        seed=seed,
    )


def graded_certificate(
    gp: GradedPresentation,
    seed: int = 0,
    repair_attempts: int | None = None,
) -> GradedCertificate:
    """Certificates of both parts of a graded presentation, resolved independently."""
    return GradedCertificate(
        even=certificate(gp.even, seed=seed, repair_attempts=repair_attempts),
        odd=certificate(gp.odd, seed=seed, repair_attempts=repair_attempts),
    )
