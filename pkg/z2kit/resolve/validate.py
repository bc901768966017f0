"""Checks that gamma defines an order-two automorphism of the presented group."""
from __future__ import annotations

import logging

from ..exactla import IntMatrix, solve_columns
from ._exceptions import InvalidPresentationError
from ._models import Presentation

logger = logging.getLogger(__name__)


def presentation_problems(p: Presentation) -> list[str]:
    """Reasons why ``p`` is invalid; empty when it is valid."""
    r, gamma = p.relations, p.gamma
    problems = []
    if solve_columns(r, gamma @ r) is None:
        problems.append("gamma does not preserve the relation lattice")
    if solve_columns(r, gamma @ gamma - IntMatrix.identity(p.generators)) is None:
        problems.append("gamma^2 is not the identity modulo relations")
    return problems


def validate_presentation(p: Presentation) -> bool:
    """
    Check that ``gamma`` descends to the quotient and has order dividing two there.

    Args:
        p: The presentation

    Returns:
        bool: True iff ``gamma R ⊆ span(R)`` and ``(gamma^2 - I) Z^g ⊆ span(R)``
    """
    problems = presentation_problems(p)
    for problem in problems:
        logger.debug("validate_presentation: %s", problem)
    return not problems


def require_valid_presentation(p: Presentation) -> None:
    """Raise ``InvalidPresentationError`` naming the first failed condition."""
    problems = presentation_problems(p)
    if problems:
        raise InvalidPresentationError(f"Invalid presentation: {'; '.join(problems)}")
