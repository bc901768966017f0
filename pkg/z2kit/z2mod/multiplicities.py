"""
Multiplicities of the indecomposable summands of an integer involution.
"""
from __future__ import annotations

import logging

from ..exactla import IntMatrix, f2_rank, kernel_basis, snf, solve_columns
from ._exceptions import DecompositionError, NotInvolutionError
from ._models import Involution, Multiplicities

logger = logging.getLogger(__name__)


def require_involution(inv: Involution) -> None:
    """Raise ``NotInvolutionError`` unless ``S @ S == I``."""
    if not inv.is_involution:
        raise NotInvolutionError()


def _index_exponent(kernel: IntMatrix, image: IntMatrix) -> int:
    # log2 of [span(kernel) : span(image)] for 2*kernel ⊆ image ⊆ kernel
    coords = solve_columns(kernel, image)
    if coords is None:
        raise DecompositionError("Image of I ± S is not contained in the eigenlattice")
    return kernel.cols - sum(1 for d in snf(coords).diagonal if d == 1)


def multiplicities(inv: Involution) -> Multiplicities:
    """
    Compute the multiplicities ``(n1, n2, n3)`` of an involution.

    ``n1`` and ``n2`` are the F_2-dimensions of ``ker(S - I) / (I + S)Z^n`` and
    ``ker(S + I) / (I - S)Z^n``; ``n3`` is the F_2-rank of ``I + S``. The
    identities ``n1 + n3 = rank ker(S - I)`` and ``n2 + n3 = rank ker(S + I)``
    are checked on every call.

    Args:
        inv: The involution

    Returns:
        Multiplicities: The complete isomorphism invariant of ``inv``

    Raises:
        NotInvolutionError: If ``S @ S != I``
        DecompositionError: If the counting identities fail
    """
    require_involution(inv)
    n = inv.n
    if n == 0:
        return Multiplicities(n1=0, n2=0, n3=0)
    s = inv.s
    identity = IntMatrix.identity(n)
    k_plus = kernel_basis(s - identity)
    k_minus = kernel_basis(s + identity)
    n1 = _index_exponent(k_plus, identity + s)
    n2 = _index_exponent(k_minus, identity - s)
    n3 = f2_rank((identity + s).mod(2))
    logger.debug(
        "multiplicities: rank K+ = %d, rank K- = %d, n1=%d n2=%d n3=%d",
        k_plus.cols, k_minus.cols, n1, n2, n3,
    )
    if n1 + n3 != k_plus.cols or n2 + n3 != k_minus.cols or n1 + n2 + 2 * n3 != n:
        raise DecompositionError(
            f"Counting identities failed: n1={n1} n2={n2} n3={n3}, "
            f"rank K+={k_plus.cols}, rank K-={k_minus.cols}, n={n}"
        )
    return Multiplicities(n1=n1, n2=n2, n3=n3)
