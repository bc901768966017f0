"""
Built-in generator maps.

``example5`` is an order-two automorphism of ``M_3 ⊗ O_4`` given on generators;
``flip_map`` exchanges ``s_1`` and ``s_2`` inside the corner of ``M_2 ⊗ O_2``.
"""
from __future__ import annotations

import logging

from ._enums import BuiltinMap, Mutation
from ._exceptions import GeneratorMapError
from ._models import GeneratorMap

logger = logging.getLogger(__name__)

EXAMPLE5_TABLE: dict[str, str] = {
    "e[1,1]x1": "e[2,2] + e[3,3]",
    "e[2,2]x1": "e[1,1] (p[1] + p[2])",
    "e[3,3]x1": "e[1,1] (p[3] + p[4])",
    "e[1,2]x1": "e[2,1] s[1]* + e[3,1] s[2]*",
    "e[1,3]x1": "e[2,1] s[3]* + e[3,1] s[4]*",
    "e[1,1]xs[1]": "e[2,2] s[1] + e[2,3] s[2]",
    "e[1,1]xs[2]": "e[2,2] s[3] + e[2,3] s[4]",
    "e[1,1]xs[3]": "e[3,2] s[1] + e[3,3] s[2]",
    "e[1,1]xs[4]": "e[3,2] s[3] + e[3,3] s[4]",
}

FLIP_TABLE: dict[str, str] = {
    "e[1,1]x1": "e[1,1]",
    "e[2,2]x1": "e[2,2]",
    "e[1,2]x1": "e[1,2]",
    "e[1,1]xs[1]": "e[1,1] s[2]",
    "e[1,1]xs[2]": "e[1,1] s[1]",
}


def example5(term_cap: int | None = None) -> GeneratorMap:
    """The built-in automorphism of ``M_3 ⊗ O_4``."""
    return GeneratorMap.from_expressions(EXAMPLE5_TABLE, 3, 4, term_cap)


def flip_map(term_cap: int | None = None) -> GeneratorMap:
    """Automorphism of ``M_2 ⊗ O_2`` exchanging ``e_11 ⊗ s_1`` and ``e_11 ⊗ s_2``."""
    return GeneratorMap.from_expressions(FLIP_TABLE, 2, 2, term_cap)


def load_builtin(name: str | BuiltinMap, term_cap: int | None = None) -> GeneratorMap:
    """
    Look up a shipped generator map by name.

    Raises:
        GeneratorMapError: If no map of that name exists
    """
    try:
        key = BuiltinMap(name)
    except ValueError as e:
        known = ", ".join(m.value for m in BuiltinMap)
        raise GeneratorMapError(f"Unknown built-in map {name!r} (known: {known})") from e
    if key is BuiltinMap.EXAMPLE5:
        return example5(term_cap)
    raise GeneratorMapError(f"Built-in map {key.value!r} is not available")


def _require(phi: GeneratorMap, *names: str) -> None:
    missing = [name for name in names if name not in phi.images]
    if missing:
        raise GeneratorMapError(
            f"Mutation needs generator(s) {', '.join(missing)} absent from M_{phi.r} ⊗ O_{phi.n}"
        )


def mutate(phi: GeneratorMap, mutation: str | Mutation) -> GeneratorMap:
    """
    Apply a single-generator edit to a map.

    Args:
        phi: Map to edit
        mutation: One of :class:`Mutation`

    Returns:
        GeneratorMap: A new map; ``phi`` is left untouched

    Raises:
        GeneratorMapError: If the mutation is unknown or refers to a missing generator
    """
    try:
        kind = Mutation(mutation)
    except ValueError as e:
        known = ", ".join(m.value for m in Mutation)
        raise GeneratorMapError(f"Unknown mutation {mutation!r} (known: {known})") from e

    images = dict(phi.images)
    if kind is Mutation.SWAP_V2_V3:
        a, b = "e[1,1]xs[2]", "e[1,1]xs[3]"
        _require(phi, a, b)
        images[a], images[b] = images[b], images[a]
    elif kind is Mutation.NEGATE_V1:
        _require(phi, "e[1,1]xs[1]")
        images["e[1,1]xs[1]"] = -images["e[1,1]xs[1]"]
    elif kind is Mutation.ZERO_V1:
        _require(phi, "e[1,1]xs[1]")
        images["e[1,1]xs[1]"] = images["e[1,1]xs[1]"] * 0
    elif kind is Mutation.NEGATE_F12:
        _require(phi, "e[1,2]x1")
        images["e[1,2]x1"] = -images["e[1,2]x1"]
    elif kind is Mutation.SWAP_F22_F33:
        a, b = "e[2,2]x1", "e[3,3]x1"
        _require(phi, a, b)
        images[a], images[b] = images[b], images[a]

    logger.debug("mutate: applied %s to M_%d ⊗ O_%d map", kind.value, phi.r, phi.n)
    return GeneratorMap(r=phi.r, n=phi.n, images=images)
