from __future__ import annotations

import logging

from ._models import Decomposition, Involution
from .canonical import canonical_form

logger = logging.getLogger(__name__)


def verify_decomposition(inv: Involution, dec: Decomposition) -> bool:
    """
    Check that ``dec.p`` is unimodular and ``P^-1 S P`` is the canonical form.

    Never raises: mismatched shapes and singular ``P`` simply fail.
    """
    p = dec.p
    if p.shape != inv.s.shape or dec.mult.n != inv.n:
        logger.warning("verify_decomposition: shape mismatch %s vs %s", p.shape, inv.s.shape)
        return False
    if not p.is_unimodular():
        logger.warning("verify_decomposition: change of basis is not unimodular")
        return False
    # For invertible P, S P == P C is equivalent to P^-1 S P == C.
    return inv.s @ p == p @ canonical_form(dec.mult)
