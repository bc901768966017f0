"""Basis words ``e_jk ⊗ s_mu s_nu*`` of the dense *-subalgebra of M_r ⊗ O_n."""
from __future__ import annotations

from typing import NamedTuple


class Word(NamedTuple):
    """The element ``e_{j,k} ⊗ s_mu s_nu*`` (indices are 1-based)."""

    j: int
    k: int
    mu: tuple[int, ...] = ()
    nu: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    def adjoint(self) -> Word:
        return Word(self.k, self.j, self.nu, self.mu)

    def expand(self, n: int) -> list[Word]:
        """``s_mu s_nu* = sum_i s_{mu i} s_{nu i}*``."""
        return [Word(self.j, self.k, self.mu + (i,), self.nu + (i,)) for i in range(1, n + 1)]

    def __str__(self) -> str:
        parts = [f"e[{self.j},{self.k}]"]
        parts.extend(f"s[{m}]" for m in self.mu)
        parts.extend(f"s[{m}]*" for m in reversed(self.nu))
        return " ".join(parts)


def word_product(a: Word, b: Word) -> Word | None:
    """
    Product of two basis words, or ``None`` when it is zero.

    ``s_nu* s_alpha`` collapses along the common prefix of ``nu`` and ``alpha``
    and vanishes when neither is a prefix of the other.
    """
    if a.k != b.j:
        return None
    nu, alpha = a.nu, b.mu
    if alpha[: len(nu)] == nu:
        return Word(a.j, b.k, a.mu + alpha[len(nu) :], b.nu)
    if nu[: len(alpha)] == alpha:
        return Word(a.j, b.k, a.mu, b.nu + nu[len(alpha) :])
    return None
