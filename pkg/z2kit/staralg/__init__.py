"""Exact *-algebra arithmetic in the dense subalgebra of M_r ⊗ O_n."""
from __future__ import annotations

from ._enums import BuiltinMap, Mutation
from ._exceptions import (
    DimensionMismatchError,
    ExpressionSyntaxError,
    FockWindowError,
    GeneratorIndexError,
    GeneratorMapError,
    StarAlgError,
    TermCapExceededError,
)
from ._models import GeneratorMap, generator_element, generator_names
from .examples import EXAMPLE5_TABLE, FLIP_TABLE, example5, flip_map, load_builtin, mutate
from .fock import fock_agrees, fock_basis, fock_image, isometry_matrix
from .hom import apply_hom, identity_map
from .parser import ParsedLine, parse, parse_lines, text_dimensions, tokenize
from .poly import StarPoly, add, adjoint, equal, mul, normalize
from .verify import relation_checks, run_checks, verify_involutive, verify_relations
from .word import Word, word_product

__all__ = [
    "EXAMPLE5_TABLE",
    "FLIP_TABLE",
    "BuiltinMap",
    "DimensionMismatchError",
    "ExpressionSyntaxError",
    "FockWindowError",
    "GeneratorIndexError",
    "GeneratorMap",
    "GeneratorMapError",
    "Mutation",
    "ParsedLine",
    "StarAlgError",
    "StarPoly",
    "TermCapExceededError",
    "Word",
    "add",
    "adjoint",
    "apply_hom",
    "equal",
    "example5",
    "flip_map",
    "fock_agrees",
    "fock_basis",
    "fock_image",
    "generator_element",
    "generator_names",
    "identity_map",
    "isometry_matrix",
    "load_builtin",
    "mul",
    "mutate",
    "normalize",
    "parse",
    "parse_lines",
    "relation_checks",
    "run_checks",
    "text_dimensions",
    "tokenize",
    "verify_involutive",
    "verify_relations",
    "word_product",
]
