"""
Exact matrices of the truncated Fock representation.

``s_i`` acts on the span of words over ``1..n`` by ``s_i e_w = e_{iw}``, and
words longer than the truncation depth are dropped. Restricted to input words of a
length ``D`` larger than every ``nu`` in play, ``s_mu s_nu*`` and its expansion
``sum_i s_{mu i} s_{nu i}*`` agree, and the outputs have length at most
``D + max|mu|``, so nothing is lost to truncation inside the window.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache

from sympy import SparseMatrix

from ._exceptions import DimensionMismatchError, FockWindowError
from .poly import StarPoly
from .word import Word

logger = logging.getLogger(__name__)

FockWord = tuple[int, ...]


@lru_cache(maxsize=32)
def fock_basis(n: int, depth: int) -> tuple[FockWord, ...]:
    """Words of length ``0..depth`` over ``1..n``, shortest first then lexicographic."""
    return tuple(
        w for length in range(depth + 1) for w in itertools.product(range(1, n + 1), repeat=length)
    )


@lru_cache(maxsize=32)
def _positions(n: int, depth: int) -> dict[FockWord, int]:
    return {w: i for i, w in enumerate(fock_basis(n, depth))}


def isometry_matrix(n: int, i: int, depth: int) -> SparseMatrix:
    """Matrix of ``s_i`` on the Fock space truncated at ``depth``."""
    index = _positions(n, depth)
    size = len(index)
    entries = {(index[(i,) + w], index[w]): 1 for w in index if len(w) < depth}
    return SparseMatrix(size, size, entries)


def _word_block(word: Word, columns: SparseMatrix, isometries: dict[int, SparseMatrix]) -> SparseMatrix:
    block = columns
    for m in word.nu:
        block = isometries[m].T * block
    for m in reversed(word.mu):
        block = isometries[m] * block
    return block


def fock_image(p: StarPoly, length: int, depth: int | None = None) -> SparseMatrix:
    """
    Exact matrix of ``p`` on Fock input words of one length.

    Columns are indexed by ``(k, w)`` with ``|w| == length``, rows by ``(j, w)``
    with ``|w| <= length + max|mu|``; the matrix-unit index is the outer block.

    Args:
        p: Element to represent
        length: Input word length, larger than every ``nu`` of ``p``
        depth: Truncation depth, at least ``length + max|mu|`` (that bound by default)

    Returns:
        SparseMatrix: Integer matrix of shape ``(r * rows, r * n**length)``

    Raises:
        FockWindowError: If ``length <= max|nu|`` or ``depth`` is too small
    """
    required = p.max_nu_length() + 1
    if length < required:
        raise FockWindowError(length, required)
    r, n = p.dims
    reach = length + p.max_mu_length()
    if depth is None:
        depth = reach
    elif depth < reach:
        raise FockWindowError(depth, reach, "depth")
    index = _positions(n, depth)
    size = len(index)
    first = index[(1,) * length]
    width = n**length
    columns = SparseMatrix(size, width, {(first + c, c): 1 for c in range(width)})
    isometries = {m: isometry_matrix(n, m, depth) for m in range(1, n + 1)}

    entries: dict[tuple[int, int], int] = {}
    for word, coeff in p:
        block = _word_block(word, columns, isometries)
        row_offset, col_offset = (word.j - 1) * size, (word.k - 1) * width
        for (i, c), value in block.todok().items():
            key = (row_offset + i, col_offset + c)
            entries[key] = entries.get(key, 0) + coeff * int(value)
    logger.debug("fock_image: %d terms on window %d (depth %d)", len(p), length, depth)
    return SparseMatrix(r * size, r * width, {k: v for k, v in entries.items() if v})


def fock_agrees(p: StarPoly, q: StarPoly) -> bool:
    """
    Compare ``p`` and ``q`` through their Fock images on a common faithful window.

    Raises:
        DimensionMismatchError: If they live in different algebras
    """
    if p.dims != q.dims:
        raise DimensionMismatchError(p.dims, q.dims)
    length = max(p.max_nu_length(), q.max_nu_length()) + 1
    depth = length + max(p.max_mu_length(), q.max_mu_length())
    return fock_image(p, length, depth) == fock_image(q, length, depth)
