"""
Extension of a generator map to all of the dense *-subalgebra.
"""
from __future__ import annotations

import logging
from functools import reduce

from ._exceptions import DimensionMismatchError
from ._models import GeneratorMap, generator_element, generator_names
from .poly import StarPoly
from .word import Word

logger = logging.getLogger(__name__)


def _word_image(phi: GeneratorMap, word: Word) -> StarPoly:
    # e_jk ⊗ s_mu s_nu* = (e_j1)(e_11 s_mu1)...(e_11 s_muL)(e_11 s_nuL)*...(e_11 s_nu1)*(e_1k)
    factors = [phi.f(word.j, 1)]
    factors += [phi.v(m) for m in word.mu]
    factors += [phi.v(m).adjoint() for m in reversed(word.nu)]
    factors.append(phi.f(1, word.k))
    return reduce(lambda a, b: a * b, factors)


def apply_hom(phi: GeneratorMap, p: StarPoly) -> StarPoly:
    """
    Apply the homomorphism determined by ``phi`` to ``p``.

    Each word ``e_jk ⊗ s_mu s_nu*`` is sent to
    ``phi(e_j1) phi(e_11 s_mu1) ... phi(e_11 s_nu1)* phi(e_1k)`` and the result is
    extended linearly.

    Args:
        phi: Generator images
        p: Element of the source algebra

    Returns:
        StarPoly: ``phi(p)``

    Raises:
        DimensionMismatchError: If ``p`` does not live in ``phi``'s algebra
    """
    if p.dims != phi.dims:
        raise DimensionMismatchError(phi.dims, p.dims)
    result = StarPoly.zero(phi.r, phi.n, p.term_cap)
    for word, coeff in p:
        result = result + _word_image(phi, word) * coeff
    return result


def identity_map(r: int, n: int, term_cap: int | None = None) -> GeneratorMap:
    """The identity endomorphism of ``M_r ⊗ O_n``."""
    return GeneratorMap(
        r=r,
        n=n,
        images={name: generator_element(name, r, n, term_cap) for name in generator_names(r, n)},
    )
