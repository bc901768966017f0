"""Human-readable descriptions of summand generators and their unitary formulas."""
from __future__ import annotations

from ..z2mod import SummandType
from ._models import ResolutionCertificate, SummandTuple


def group_ring_element(k: int, l: int) -> str:  # noqa: E741
    """Format ``k + l s``, e.g. ``2 - s`` or ``3``."""
    if l == 0:
        return str(k)
    s_term = "s" if abs(l) == 1 else f"{abs(l)}s"
    if k == 0:
        return s_term if l > 0 else f"-{s_term}"
    return f"{k} {'+' if l > 0 else '-'} {s_term}"


def _unitary_pairs(first: tuple[int, ...], second: tuple[int, ...]) -> str:
    pairs = ", ".join(f"(u^{a} - 1, u^{b} - 1)" for a, b in zip(first, second))
    return f"({pairs})"


def render_summand(summand: SummandTuple) -> str:
    """
    Describe one summand generator and the map it determines on ``u - 1``.

    T1 and T2 generators give a single homomorphism; a T3 generator gives the
    pair of homomorphisms for the two projections.
    """
    k, l = summand.k, summand.l  # noqa: E741
    element = "(" + ", ".join(group_ring_element(a, b) for a, b in zip(k, l)) + ")"
    kind = summand.kind
    if kind is SummandType.T1:
        return f"T1: m = {element}; phi(u - 1) = {_unitary_pairs(k, k)}"
    if kind is SummandType.T2:
        return f"T2: m = {element}; phi(u - 1) = {_unitary_pairs(k, tuple(-a for a in k))}"
    return (
        f"T3: m = {element}; psi1(u - 1) = {_unitary_pairs(k, l)}; "
        f"psi2(u - 1) = {_unitary_pairs(l, k)}"
    )


def render_certificate(cert: ResolutionCertificate) -> list[str]:
    return [render_summand(summand) for summand in cert.summands]
