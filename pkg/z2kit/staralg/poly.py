"""
Integer combinations of basis words with a canonical normal form.

Terms are grouped by ``(j, k, |mu| - |nu|)``. Inside a group every word is
expanded to the longest ``mu`` present with ``s_mu s_nu* = sum_i s_{mu i} s_{nu i}*``,
zero coefficients are dropped, and the group is contracted again while all of
its terms come in complete families ``{s_{mu i} s_{nu i}* : i = 1..n}`` with a
common coefficient. Words of one length are linearly independent, so the
result is the same for equal elements.
"""
from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from types import MappingProxyType
from typing import Any, Union

from ..config import get_config
from ._exceptions import DimensionMismatchError, GeneratorIndexError, TermCapExceededError
from .word import Word, word_product

logger = logging.getLogger(__name__)

Terms = Union[Mapping[Word, int], Iterable[tuple[Word, int]]]


def _level_group(words: dict[Word, int], n: int, budget: list[int]) -> dict[Word, int]:
    level = max(len(w.mu) for w in words)
    out: dict[Word, int] = defaultdict(int)
    for word, coeff in words.items():
        gap = level - len(word.mu)
        count = n**gap
        budget[0] -= count
        if budget[0] < 0:
            raise TermCapExceededError(budget[1])
        if gap == 0:
            out[word] += coeff
            continue
        for suffix in itertools.product(range(1, n + 1), repeat=gap):
            out[Word(word.j, word.k, word.mu + suffix, word.nu + suffix)] += coeff
    leveled = {w: c for w, c in out.items() if c}
    while leveled:
        sample = next(iter(leveled))
        if not sample.mu or not sample.nu:
            break
        families: dict[tuple[tuple[int, ...], tuple[int, ...]], dict[int, int]] = defaultdict(dict)
        for word, coeff in leveled.items():
            if word.mu[-1] != word.nu[-1]:
                return leveled
            families[(word.mu[:-1], word.nu[:-1])][word.mu[-1]] = coeff
        contracted: dict[Word, int] = {}
        for (mu, nu), members in families.items():
            values = set(members.values())
            if len(members) != n or len(values) != 1:
                return leveled
            contracted[Word(sample.j, sample.k, mu, nu)] = values.pop()
        leveled = contracted
    return leveled


def normalize_terms(terms: Iterable[tuple[Word, int]], n: int, term_cap: int) -> dict[Word, int]:
    """
    Canonical representation of a linear combination of words.

    Raises:
        TermCapExceededError: If leveling would create more than ``term_cap`` terms
    """
    groups: dict[tuple[int, int, int], dict[Word, int]] = defaultdict(lambda: defaultdict(int))
    for word, coeff in terms:
        if coeff:
            groups[(word.j, word.k, word.degree)][word] += coeff
    budget = [term_cap, term_cap]
    result: dict[Word, int] = {}
    for key in sorted(groups):
        words = {w: c for w, c in groups[key].items() if c}
        if words:
            result.update(_level_group(words, n, budget))
    return result


class StarPoly:
    """
    Element of the dense *-subalgebra of ``M_r ⊗ O_n`` with integer coefficients.

    Values are immutable and always normalized, so ``==`` decides algebraic
    equality. Arithmetic between different ``(r, n)`` raises
    ``DimensionMismatchError``.
    """

    __slots__ = ("_r", "_n", "_terms", "_cap")

    def __init__(self, r: int, n: int, terms: Terms = (), term_cap: int | None = None) -> None:
        if r < 1 or n < 2:
            raise GeneratorIndexError(f"M_{r} ⊗ O_{n} needs r >= 1 and n >= 2")
        self._r = r
        self._n = n
        self._cap = term_cap if term_cap is not None else get_config().term_cap
        items = list(terms.items() if isinstance(terms, Mapping) else terms)
        for word, _ in items:
            self._check_word(word)
        normal = normalize_terms(items, n, self._cap)
        self._terms = MappingProxyType(dict(sorted(normal.items())))

    def _check_word(self, word: Word) -> None:
        r, n = self._r, self._n
        if not (1 <= word.j <= r and 1 <= word.k <= r):
            raise GeneratorIndexError(f"Matrix unit e[{word.j},{word.k}] outside M_{r}")
        for letter in word.mu + word.nu:
            if not 1 <= letter <= n:
                raise GeneratorIndexError(f"Isometry s[{letter}] outside O_{n}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, r: int, n: int, term_cap: int | None = None) -> StarPoly:
        return cls(r, n, (), term_cap)

    @classmethod
    def scalar(cls, r: int, n: int, value: int, term_cap: int | None = None) -> StarPoly:
        """``value`` times the unit ``sum_j e_jj ⊗ 1``."""
        return cls(r, n, [(Word(j, j), value) for j in range(1, r + 1)], term_cap)

    @classmethod
    def one(cls, r: int, n: int, term_cap: int | None = None) -> StarPoly:
        return cls.scalar(r, n, 1, term_cap)

    @classmethod
    def word(cls, r: int, n: int, word: Word, coeff: int = 1, term_cap: int | None = None) -> StarPoly:
        return cls(r, n, [(word, coeff)], term_cap)

    @classmethod
    def matrix_unit(cls, r: int, n: int, j: int, k: int, term_cap: int | None = None) -> StarPoly:
        """``e_jk ⊗ 1``."""
        return cls(r, n, [(Word(j, k), 1)], term_cap)

    @classmethod
    def isometry(cls, r: int, n: int, m: int, term_cap: int | None = None) -> StarPoly:
        """``1 ⊗ s_m``."""
        return cls(r, n, [(Word(j, j, (m,)), 1) for j in range(1, r + 1)], term_cap)

    @classmethod
    def projection(cls, r: int, n: int, m: int, term_cap: int | None = None) -> StarPoly:
        """``1 ⊗ s_m s_m*``."""
        return cls(r, n, [(Word(j, j, (m,), (m,)), 1) for j in range(1, r + 1)], term_cap)

    def _like(self, terms: Terms, cap: int | None = None) -> StarPoly:
        return StarPoly(self._r, self._n, terms, cap if cap is not None else self._cap)

    # -- accessors --------------------------------------------------------

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return self._n

    @property
    def dims(self) -> tuple[int, int]:
        return (self._r, self._n)

    @property
    def term_cap(self) -> int:
        return self._cap

    @property
    def terms(self) -> Mapping[Word, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self._terms.items())

    def max_nu_length(self) -> int:
        return max((len(w.nu) for w in self._terms), default=0)

    def max_mu_length(self) -> int:
        return max((len(w.mu) for w in self._terms), default=0)

    # -- algebra ----------------------------------------------------------

    def _coerce(self, other: Any) -> StarPoly:
        if isinstance(other, StarPoly):
            if other.dims != self.dims:
                raise DimensionMismatchError(self.dims, other.dims)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return StarPoly.scalar(self._r, self._n, other, self._cap)
        raise TypeError(f"Cannot combine StarPoly with {type(other).__name__}")

    def __add__(self, other: StarPoly | int) -> StarPoly:
        q = self._coerce(other)
        return self._like(itertools.chain(self, q), min(self._cap, q._cap))

    __radd__ = __add__

    def __neg__(self) -> StarPoly:
        return self._like((w, -c) for w, c in self)

    def __sub__(self, other: StarPoly | int) -> StarPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> StarPoly:
        return self._coerce(other) - self

    def __mul__(self, other: StarPoly | int) -> StarPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return self._like((w, other * c) for w, c in self)
        q = self._coerce(other)
        products: dict[Word, int] = defaultdict(int)
        for (a, ca), (b, cb) in itertools.product(self, q):
            word = word_product(a, b)
            if word is not None:
                products[word] += ca * cb
        return self._like(products, min(self._cap, q._cap))

    def __rmul__(self, other: int) -> StarPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    __matmul__ = __mul__

    def adjoint(self) -> StarPoly:
        """``(e_jk ⊗ s_mu s_nu*)* = e_kj ⊗ s_nu s_mu*``, extended linearly."""
        return self._like((w.adjoint(), c) for w, c in self)

    @property
    def H(self) -> StarPoly:  # noqa: N802
        return self.adjoint()

    def __pow__(self, exponent: int) -> StarPoly:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = StarPoly.one(self._r, self._n, self._cap)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = StarPoly.scalar(self._r, self._n, other, self._cap)
        if not isinstance(other, StarPoly):
            return NotImplemented
        if other.dims != self.dims:
            raise DimensionMismatchError(self.dims, other.dims)
        return dict(self._terms) == dict(other._terms)

    __hash__ = None  # type: ignore[assignment]

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"StarPoly(r={self._r}, n={self._n}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (word, coeff) in enumerate(self):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = str(word) if magnitude == 1 else f"{magnitude} {word}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)


def equal(p: StarPoly, q: StarPoly) -> bool:
    """Whether ``p`` and ``q`` are the same element (``normalize(p - q) == 0``).

    Raises:
        DimensionMismatchError: If they live in different algebras
    """
    return (p - q).is_zero()


def add(p: StarPoly, q: StarPoly) -> StarPoly:
    return p + q


def mul(p: StarPoly, q: StarPoly) -> StarPoly:
    return p * q


def adjoint(p: StarPoly) -> StarPoly:
    return p.adjoint()


def normalize(p: StarPoly) -> StarPoly:
    """Normal form of ``p``; every ``StarPoly`` is stored normalized already."""
    return StarPoly(p.r, p.n, p.terms, p.term_cap)
