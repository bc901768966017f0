"""Z[Z/2]-modules that are free over Z: multiplicities and canonical decomposition."""
from __future__ import annotations

from ._enums import SummandType
from ._exceptions import ChainViolationError, DecompositionError, NotInvolutionError, Z2ModError
from ._models import Decomposition, Involution, Multiplicities
from .canonical import SWAP, canonical_form
from .decompose import decompose
from .lift import lift_subspace_to_summand
from .multiplicities import multiplicities, require_involution
from .split import RelativeSplit, split_relative
from .verify import verify_decomposition

__all__ = [
    "SWAP",
    "ChainViolationError",
    "Decomposition",
    "DecompositionError",
    "Involution",
    "Multiplicities",
    "NotInvolutionError",
    "RelativeSplit",
    "SummandType",
    "Z2ModError",
    "canonical_form",
    "decompose",
    "lift_subspace_to_summand",
    "multiplicities",
    "require_involution",
    "split_relative",
    "verify_decomposition",
]
