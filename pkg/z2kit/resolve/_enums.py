"""Enums for resolution certificates."""
from __future__ import annotations

from enum import Enum


class CertificateCheck(str, Enum):
    """Named checks of a resolution certificate, in report order."""

    EMBEDDING_INJECTIVE = "embedding-injective"
    KERNEL_MAPS_TO_RELATIONS = "kernel-maps-to-relations"
    COVER_SURJECTIVE = "cover-surjective"
    COVER_EQUIVARIANT = "cover-equivariant"
    COKERNEL_INJECTIVE = "cokernel-injective"
    COKERNEL_INVARIANTS = "cokernel-invariants"
    INVOLUTION_RESTRICTS = "involution-restricts"
    DECOMPOSITION_VALID = "decomposition-valid"
    SUMMAND_GENERATORS = "summand-generators"


class Degree(str, Enum):
    """Degree of a graded presentation."""

    EVEN = "even"
    ODD = "odd"
