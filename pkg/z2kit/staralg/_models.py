from __future__ import annotations

import re
from typing import Any

from pydantic import Field, model_validator

from .._base import Z2KitModel
from ._exceptions import ExpressionSyntaxError, GeneratorIndexError, GeneratorMapError
from .poly import StarPoly
from .word import Word

_GENERATOR = re.compile(r"^e\[(\d+),(\d+)\]x(?:1|s\[(\d+)\])$")


def generator_names(r: int, n: int) -> list[str]:
    """Generators whose images define a map, in table order."""
    names = [f"e[{j},{j}]x1" for j in range(1, r + 1)]
    names += [f"e[1,{j}]x1" for j in range(2, r + 1)]
    names += [f"e[1,1]xs[{m}]" for m in range(1, n + 1)]
    return names


def generator_element(name: str, r: int, n: int, term_cap: int | None = None) -> StarPoly:
    """The element of ``M_r ⊗ O_n`` a generator name stands for."""
    match = _GENERATOR.match(name.replace(" ", ""))
    if match is None:
        raise GeneratorMapError(f"Unknown generator name {name!r}")
    j, k, m = int(match[1]), int(match[2]), match[3]
    word = Word(j, k, (int(m),)) if m is not None else Word(j, k)
    return StarPoly.word(r, n, word, term_cap=term_cap)


def _infer_dimensions(names: list[str]) -> tuple[int, int]:
    r = n = 0
    for name in names:
        match = _GENERATOR.match(name)
        if match is None:
            raise GeneratorMapError(f"Unknown generator name {name!r}")
        if match[3] is None:
            r = max(r, int(match[1]), int(match[2]))
        else:
            n = max(n, int(match[3]))
    return r, n


class GeneratorMap(Z2KitModel):
    """Images of the defining generators of an endomorphism of ``M_r ⊗ O_n``.

    Attributes:
        r: Matrix size
        n: Cuntz index
        images: Image of every name in :func:`generator_names`, keyed by name
    """

    r: int = Field(..., ge=1, description="Matrix size")
    n: int = Field(..., ge=2, description="Cuntz index")
    images: dict[str, StarPoly] = Field(..., description="Generator name to image")

    @model_validator(mode="after")
    def check_generators(self) -> GeneratorMap:
        expected = generator_names(self.r, self.n)
        missing = [name for name in expected if name not in self.images]
        extra = sorted(set(self.images) - set(expected))
        if missing or extra:
            parts = []
            if missing:
                parts.append(f"missing {', '.join(missing)}")
            if extra:
                parts.append(f"unexpected {', '.join(extra)}")
            raise GeneratorMapError(f"Generator map for M_{self.r} ⊗ O_{self.n}: {'; '.join(parts)}")
        for name, image in self.images.items():
            if image.dims != (self.r, self.n):
                raise GeneratorMapError(f"Image of {name} lives in M_{image.r} ⊗ O_{image.n}")
        return self

    @classmethod
    def from_expressions(
        cls, expressions: dict[str, str], r: int, n: int, term_cap: int | None = None
    ) -> GeneratorMap:
        """Parse every image expression over ``(r, n)``."""
        from .parser import parse

        images = {}
        for name, source in expressions.items():
            key = name.replace(" ", "")
            if not isinstance(source, str):
                raise GeneratorMapError(f"Image of {name} must be an expression string")
            try:
                images[key] = parse(source, r, n, term_cap)
            except (ExpressionSyntaxError, GeneratorIndexError) as e:
                raise GeneratorMapError(f"Image of {name}: {e.message}") from e
        return cls(r=r, n=n, images=images)

    @classmethod
    def from_payload(cls, payload: Any, term_cap: int | None = None) -> GeneratorMap:
        """
        Parse a generator map file.

        Accepts ``{"matrix_size": r, "cuntz_index": n, "images": {...}}`` or a bare
        mapping from generator names to expressions (``r`` and ``n`` inferred).

        Raises:
            GeneratorMapError: If the payload is malformed or the generator set is wrong
        """
        if not isinstance(payload, dict):
            raise GeneratorMapError("Generator map must be a JSON object")
        if "images" in payload:
            expressions = payload["images"]
            if not isinstance(expressions, dict):
                raise GeneratorMapError('"images" must map generator names to expressions')
            r, n = _infer_dimensions([k.replace(" ", "") for k in expressions])
            r = payload.get("matrix_size", r)
            n = payload.get("cuntz_index", n)
        else:
            expressions = payload
            r, n = _infer_dimensions([k.replace(" ", "") for k in expressions])
        if not isinstance(r, int) or not isinstance(n, int) or r < 1 or n < 2:
            raise GeneratorMapError(f"Invalid dimensions matrix_size={r!r}, cuntz_index={n!r}")
        return cls.from_expressions(expressions, r, n, term_cap)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.r, self.n)

    def f(self, j: int, k: int) -> StarPoly:
        """Image of ``e_jk ⊗ 1``."""
        if j == k:
            return self.images[f"e[{j},{j}]x1"]
        if j == 1:
            return self.images[f"e[1,{k}]x1"]
        if k == 1:
            return self.images[f"e[1,{j}]x1"].adjoint()
        return self.f(j, 1) * self.f(1, k)

    def v(self, m: int) -> StarPoly:
        """Image of ``e_11 ⊗ s_m``."""
        return self.images[f"e[1,1]xs[{m}]"]

    def to_payload(self) -> dict[str, Any]:
        return {
            "matrix_size": self.r,
            "cuntz_index": self.n,
            "images": {name: str(self.images[name]) for name in generator_names(self.r, self.n)},
        }
