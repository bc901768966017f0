"""Canonical block form of an involution."""
from __future__ import annotations

from ..exactla import IntMatrix
from ._models import Multiplicities

SWAP = IntMatrix.from_rows([[0, 1], [1, 0]])


def canonical_form(mult: Multiplicities) -> IntMatrix:
    """Block diagonal ``I_n1 ⊕ -I_n2 ⊕ swap^n3``."""
    blocks = [IntMatrix.identity(mult.n1), -IntMatrix.identity(mult.n2)] + [SWAP] * mult.n3
    return IntMatrix.block_diagonal(blocks)
