from __future__ import annotations

from typing import Any

from pydantic import Field, ValidationError, field_validator, model_validator

from .._base import VerificationReport, Z2KitModel
from ..exactla import IntMatrix, MatrixFormatError
from ..z2mod import Decomposition, Involution, SummandType
from ._exceptions import PresentationFormatError


def _coerce_matrix(value: Any) -> IntMatrix:
    if isinstance(value, IntMatrix):
        return value
    if isinstance(value, dict):
        return IntMatrix.from_payload(value)
    try:
        return IntMatrix.from_rows(value)
    except TypeError as e:
        raise ValueError(f"expected a matrix, got {type(value).__name__}") from e


class Presentation(Z2KitModel):
    """Finitely presented abelian group ``Z^g / span(R)`` with an automorphism ``gamma``."""

    generators: int = Field(..., ge=0, description="Number of generators g")
    relations: IntMatrix = Field(..., description="g x r matrix whose columns are relators")
    gamma: IntMatrix = Field(..., description="g x g action of the automorphism on generators")

    @field_validator("relations", "gamma", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> IntMatrix:
        return _coerce_matrix(value)

    @model_validator(mode="after")
    def check_shapes(self) -> Presentation:
        g = self.generators
        if self.relations.rows != g:
            raise ValueError(f"relations must have {g} rows, got {self.relations.rows}")
        if self.gamma.shape != (g, g):
            raise ValueError(f"gamma must be {g}x{g}, got {self.gamma.rows}x{self.gamma.cols}")
        return self

    @classmethod
    def from_payload(cls, payload: Any) -> Presentation:
        """
        Parse ``{"generators": g, "relations": <matrix>, "gamma": <matrix>}``.

        Raises:
            PresentationFormatError: If the payload is malformed
        """
        try:
            return cls.model_validate(payload)
        except MatrixFormatError as e:
            raise PresentationFormatError(f"Invalid presentation: {e.message}") from e
        except ValidationError as e:
            first = e.errors(include_url=False)[0]
            where = ".".join(str(x) for x in first["loc"])
            raise PresentationFormatError(
                f"Invalid presentation: {where + ': ' if where else ''}{first['msg']}",
                errors=e.errors(include_url=False),
            ) from e

    def to_payload(self) -> dict[str, Any]:
        return {
            "generators": self.generators,
            "relations": self.relations.to_payload(),
            "gamma": self.gamma.to_payload(),
        }


class GradedPresentation(Z2KitModel):
    """A Z/2-graded group, handled as two independent presentations."""

    even: Presentation
    odd: Presentation

    @classmethod
    def from_payload(cls, payload: Any) -> GradedPresentation:
        if not isinstance(payload, dict) or set(payload) != {"even", "odd"}:
            raise PresentationFormatError('Graded presentation needs exactly the keys "even" and "odd"')
        return cls(
            even=Presentation.from_payload(payload["even"]),
            odd=Presentation.from_payload(payload["odd"]),
        )


class FreeCover(Z2KitModel):
    """Equivariant surjection from a free Z[Z/2]-module N onto the presented group.

    N has Z-basis ``b_1, s b_1, b_2, s b_2, ...``; column ``2i`` of ``tau`` is the
    image of ``b_{i+1}`` and column ``2i + 1`` the image of ``s b_{i+1}``.
    """

    rank: int = Field(..., ge=0, description="Number of Z[Z/2]-generators of N")
    tau: IntMatrix = Field(..., description="g x 2*rank images of the Z-basis of N")

    @property
    def swap(self) -> IntMatrix:
        """Action of s on N in its standard Z-basis."""
        return IntMatrix.block_diagonal([IntMatrix.from_rows([[0, 1], [1, 0]])] * self.rank)


class KernelModule(Z2KitModel):
    """``M = ker(tau)`` with its induced involution and its basis inside N."""

    involution: Involution
    embedding: IntMatrix = Field(..., description="2*rank x m basis of M in N-coordinates")


class SummandTuple(Z2KitModel):
    """Exponent data of one summand generator ``m = (k_1 + l_1 s, k_2 + l_2 s, ...)``."""

    kind: SummandType
    k: tuple[int, ...] = Field(..., description="Coefficients of 1 per Z[Z/2]-coordinate")
    l: tuple[int, ...] = Field(..., description="Coefficients of s per Z[Z/2]-coordinate")  # noqa: E741
    generator: tuple[int, ...] = Field(..., description="The generator in N-coordinates")

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"type": self.kind.value, "k": list(self.k)}
        if self.kind is SummandType.T3:
            payload["l"] = list(self.l)
        return payload


class ResolutionCertificate(Z2KitModel):
    """Cover, kernel and kernel decomposition of a presentation."""

    presentation: Presentation
    cover: FreeCover
    kernel: KernelModule
    decomposition: Decomposition
    summands: list[SummandTuple] = Field(default_factory=list)
    seed: int = Field(0, description="Seed passed to the decomposition")

    @property
    def embedding(self) -> IntMatrix:
        return self.kernel.embedding

    def to_payload(self) -> dict[str, Any]:
        from .render import render_certificate

        return {
            "multiplicities": self.decomposition.mult.to_payload(),
            "cover": {"rank": self.cover.rank, "tau": self.cover.tau.to_payload()},
            "embedding": self.kernel.embedding.to_payload(),
            "kernel_involution": self.kernel.involution.s.to_payload(),
            "P": self.decomposition.p.to_payload(),
            "tuples": [summand.to_payload() for summand in self.summands],
            "render": render_certificate(self),
        }


class GradedCertificate(Z2KitModel):
    """Certificates of the even and odd parts of a graded presentation."""

    even: ResolutionCertificate
    odd: ResolutionCertificate

    def to_payload(self) -> dict[str, Any]:
        return {"even": self.even.to_payload(), "odd": self.odd.to_payload()}


class CertificateReport(VerificationReport):
    """Named checks of a resolution certificate."""

    title: str = "resolution certificate"
