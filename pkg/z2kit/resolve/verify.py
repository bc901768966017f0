"""Independent verification of resolution certificates."""
from __future__ import annotations

import logging
from collections.abc import Callable

from .._base import CheckResult
from ..exactla import IntMatrix, kernel_basis, snf, solve_columns
from ..z2mod import SummandType, verify_decomposition
from ._enums import CertificateCheck, Degree
from ._models import (
    CertificateReport,
    GradedCertificate,
    GradedPresentation,
    Presentation,
    ResolutionCertificate,
)
from .cover import cover_is_equivariant, cover_is_surjective

logger = logging.getLogger(__name__)

Check = Callable[[Presentation, ResolutionCertificate], "tuple[bool, str | None]"]


def _cokernel_shape(a: IntMatrix) -> tuple[int, tuple[int, ...]]:
    # (free rank, torsion invariants) of Z^rows / span(columns)
    form = snf(a)
    return a.rows - form.rank, tuple(d for d in form.invariants if d != 1)


def _describe_cokernel(free: int, torsion: tuple[int, ...]) -> str:
    parts = [f"Z/{d}" for d in torsion] + ["Z"] * free
    return " + ".join(parts) if parts else "0"


def _embedding_injective(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    e = cert.embedding
    if e.rows != 2 * cert.cover.rank:
        return False, f"embedding has {e.rows} rows, N has rank {2 * cert.cover.rank}"
    rank = e.rank()
    return rank == e.cols, f"rank {rank} of {e.cols} columns"


def _kernel_maps_to_relations(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    images = cert.cover.tau @ cert.embedding
    return solve_columns(p.relations, images) is not None, None


def _cover_surjective(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    return cover_is_surjective(p, cert.cover), None


def _cover_equivariant(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    return cover_is_equivariant(p, cert.cover), "tau intertwines s with gamma modulo relations"


def _cokernel_injective(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    # Every x in N with tau(x) in span(R) must lie in M.
    size = 2 * cert.cover.rank
    preimage = kernel_basis(cert.cover.tau.hstack(p.relations)).select_rows(range(size))
    missing = solve_columns(cert.embedding, preimage) is None
    return not missing, "some element of ker(N -> G) is outside M" if missing else None


def _cokernel_invariants(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    ours = _cokernel_shape(cert.embedding)
    theirs = _cokernel_shape(p.relations)
    detail = f"N/M = {_describe_cokernel(*ours)}, G = {_describe_cokernel(*theirs)}"
    return ours == theirs, detail


def _involution_restricts(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    e = cert.embedding
    return e @ cert.kernel.involution.s == cert.cover.swap @ e, None


def _decomposition_valid(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    return verify_decomposition(cert.kernel.involution, cert.decomposition), None


def _summand_generators(p: Presentation, cert: ResolutionCertificate) -> tuple[bool, str | None]:
    generators = cert.embedding @ cert.decomposition.p
    swap = cert.cover.swap
    layout = cert.decomposition.summand_columns()
    if len(layout) != len(cert.summands):
        return False, f"{len(cert.summands)} tuples for {len(layout)} summands"
    for index, ((kind, columns), summand) in enumerate(zip(layout, cert.summands)):
        m = generators.column(columns[0])
        interleaved = tuple(x for pair in zip(summand.k, summand.l) for x in pair)
        if summand.kind is not kind or summand.generator != m or interleaved != m:
            return False, f"summand {index + 1} does not match column {columns[0] + 1}"
        sm = swap @ m
        if kind is SummandType.T1 and summand.l != summand.k:
            return False, f"summand {index + 1}: s m != m"
        if kind is SummandType.T2 and summand.l != tuple(-x for x in summand.k):
            return False, f"summand {index + 1}: s m != -m"
        if kind is SummandType.T3 and IntMatrix.from_columns([m, sm], len(m)).rank() != 2:
            return False, f"summand {index + 1}: m and s m are dependent"
    return True, None


_CHECKS: list[tuple[CertificateCheck, Check]] = [
    (CertificateCheck.EMBEDDING_INJECTIVE, _embedding_injective),
    (CertificateCheck.KERNEL_MAPS_TO_RELATIONS, _kernel_maps_to_relations),
    (CertificateCheck.COVER_SURJECTIVE, _cover_surjective),
    (CertificateCheck.COVER_EQUIVARIANT, _cover_equivariant),
    (CertificateCheck.COKERNEL_INJECTIVE, _cokernel_injective),
    (CertificateCheck.COKERNEL_INVARIANTS, _cokernel_invariants),
    (CertificateCheck.INVOLUTION_RESTRICTS, _involution_restricts),
    (CertificateCheck.DECOMPOSITION_VALID, _decomposition_valid),
    (CertificateCheck.SUMMAND_GENERATORS, _summand_generators),
]


def verify_certificate(p: Presentation, cert: ResolutionCertificate) -> CertificateReport:
    """
    Run every named check of a resolution certificate.

    Surjectivity, injectivity on the cokernel and equivariance of the cover
    together show that ``tau`` induces an isomorphism ``N/M -> G`` of
    Z[Z/2]-modules; the Smith invariants of both sides are compared as well.
    A check whose data is malformed fails with the error as its detail.

    Returns:
        CertificateReport: One entry per check, in a fixed order
    """
    results = []
    for name, check in _CHECKS:
        try:
            passed, detail = check(p, cert)
        except Exception as e:  # noqa: BLE001
            passed, detail = False, f"{type(e).__name__}: {e}"
        if not passed:
            logger.warning("verify_certificate: %s failed (%s)", name.value, detail)
        results.append(CheckResult(name=name.value, passed=passed, detail=detail))
    return CertificateReport(checks=results)


def verify_graded_certificate(gp: GradedPresentation, cert: GradedCertificate) -> CertificateReport:
    """Checks of both parts, prefixed with ``even/`` and ``odd/``."""
    checks = []
    for degree, presentation, part in ((Degree.EVEN, gp.even, cert.even), (Degree.ODD, gp.odd, cert.odd)):
        for result in verify_certificate(presentation, part):
            checks.append(result.model_copy(update={"name": f"{degree.value}/{result.name}"}))
    return CertificateReport(title="graded resolution certificate", checks=checks)
