"""Free Z[Z/2]-resolutions of finitely presented groups with an involution."""
from __future__ import annotations

from ._enums import CertificateCheck, Degree
from ._exceptions import InvalidPresentationError, PresentationFormatError, ResolveError
from ._models import (
    CertificateReport,
    FreeCover,
    GradedCertificate,
    GradedPresentation,
    KernelModule,
    Presentation,
    ResolutionCertificate,
    SummandTuple,
)
from .certificate import certificate, graded_certificate, summand_tuple
from .cover import cover_is_equivariant, cover_is_surjective, free_cover
from .kernel import kernel_module
from .render import group_ring_element, render_certificate, render_summand
from .validate import presentation_problems, require_valid_presentation, validate_presentation
from .verify import verify_certificate, verify_graded_certificate

__all__ = [
    "CertificateCheck",
    "CertificateReport",
    "Degree",
    "FreeCover",
    "GradedCertificate",
    "GradedPresentation",
    "InvalidPresentationError",
    "KernelModule",
    "Presentation",
    "PresentationFormatError",
    "ResolutionCertificate",
    "ResolveError",
    "SummandTuple",
    "certificate",
    "cover_is_equivariant",
    "cover_is_surjective",
    "free_cover",
    "graded_certificate",
    "group_ring_element",
    "kernel_module",
    "presentation_problems",
    "render_certificate",
    "render_summand",
    "require_valid_presentation",
    "summand_tuple",
    "validate_presentation",
    "verify_certificate",
    "verify_graded_certificate",
]
