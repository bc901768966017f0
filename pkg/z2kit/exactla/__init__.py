"""Exact linear algebra over Z and F_p."""
from __future__ import annotations

from ._exceptions import (
    DependentGeneratorsError,
    ExactLAError,
    MatrixFormatError,
    NotPrimitiveError,
    NotUnimodularError,
    ShapeMismatchError,
)
from ._models import MatrixPayload
from .complete import complete_to_basis
from .f2 import (
    f2_complement,
    f2_rank,
    f2_row_reduce,
    fp_complement,
    fp_rank,
    fp_row_reduce,
    fp_span_basis,
)
from .hnf import HermiteForm, hnf
from .kernel import is_primitive, kernel_basis, rank, saturate
from .lift import lift_unimodular
from .matrix import F2Matrix, FpMatrix, IntMatrix, Vector
from .snf import SmithForm, snf
from .solve import in_column_span, solve, solve_columns

__all__ = [
    "DependentGeneratorsError",
    "ExactLAError",
    "F2Matrix",
    "FpMatrix",
    "HermiteForm",
    "IntMatrix",
    "MatrixFormatError",
    "MatrixPayload",
    "NotPrimitiveError",
    "NotUnimodularError",
    "ShapeMismatchError",
    "SmithForm",
    "Vector",
    "complete_to_basis",
    "f2_complement",
    "f2_rank",
    "f2_row_reduce",
    "fp_complement",
    "fp_rank",
    "fp_row_reduce",
    "fp_span_basis",
    "hnf",
    "in_column_span",
    "is_primitive",
    "kernel_basis",
    "lift_unimodular",
    "rank",
    "saturate",
    "snf",
    "solve",
    "solve_columns",
]
