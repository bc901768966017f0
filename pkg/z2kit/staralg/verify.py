"""Relation and involutivity checks for generator maps."""
from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

from .._base import CheckResult, VerificationReport
from ._exceptions import StarAlgError
from ._models import GeneratorMap, generator_element, generator_names
from .hom import apply_hom
from .poly import StarPoly

logger = logging.getLogger(__name__)

Relation = tuple[str, Callable[[], bool]]


def _evaluate(item: Relation) -> CheckResult:
    name, check = item
    try:
        return CheckResult(name=name, passed=check())
    except StarAlgError as e:
        return CheckResult(name=name, passed=False, detail=e.message)


def run_checks(title: str, items: list[Relation], workers: int = 1) -> VerificationReport:
    """Evaluate independent checks, optionally on a thread pool; order is kept."""
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, items))
    else:
        results = [_evaluate(item) for item in items]
    for result in results:
        if not result.passed:
            logger.warning("%s: %s failed", title, result.name)
    return VerificationReport(title=title, checks=results)


def relation_checks(phi: GeneratorMap) -> list[Relation]:
    """The defining relations of ``M_r ⊗ O_n`` evaluated on the images."""
    r, n = phi.dims
    f, v = phi.f, phi.v

    def projection(j: int) -> bool:
        p = f(j, j)
        return p * p == p and p.adjoint() == p

    def units_sum() -> bool:
        return sum((f(j, j) for j in range(2, r + 1)), f(1, 1)) == StarPoly.one(r, n)

    def ranges_sum() -> bool:
        return sum((v(m) * v(m).adjoint() for m in range(1, n + 1)), StarPoly.zero(r, n)) == f(1, 1)

    items: list[Relation] = []
    for j in range(1, r + 1):
        items.append((f"f[{j},{j}] is a projection", lambda j=j: projection(j)))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            items.append((f"f[{i},{i}] f[{j},{j}] = 0", lambda i=i, j=j: (f(i, i) * f(j, j)).is_zero()))
    items.append(("sum f[j,j] = 1", units_sum))
    for j in range(2, r + 1):
        items.append((f"f[1,{j}] f[1,{j}]* = f[1,1]", lambda j=j: f(1, j) * f(1, j).adjoint() == f(1, 1)))
        items.append((f"f[1,{j}]* f[1,{j}] = f[{j},{j}]", lambda j=j: f(1, j).adjoint() * f(1, j) == f(j, j)))
        items.append(
            (f"f[1,1] f[1,{j}] f[{j},{j}] = f[1,{j}]", lambda j=j: f(1, 1) * f(1, j) * f(j, j) == f(1, j))
        )
    for m in range(1, n + 1):
        items.append((f"v[{m}]* v[{m}] = f[1,1]", lambda m=m: v(m).adjoint() * v(m) == f(1, 1)))
        items.append((f"f[1,1] v[{m}] f[1,1] = v[{m}]", lambda m=m: f(1, 1) * v(m) * f(1, 1) == v(m)))
    items.append(("sum v[m] v[m]* = f[1,1]", ranges_sum))
    return items


def verify_relations(phi: GeneratorMap, workers: int = 1) -> VerificationReport:
    """
    Check that the images satisfy the relations of ``M_r ⊗ O_n``.

    With ``f[j,k]`` the image of ``e_jk ⊗ 1`` and ``v[m]`` the image of
    ``e_11 ⊗ s_m``: the ``f[j,j]`` are orthogonal projections summing to 1,
    each ``f[1,j]`` is a partial isometry from ``f[j,j]`` onto ``f[1,1]``, the
    ``v[m]`` are isometries of ``f[1,1]`` with ranges summing to ``f[1,1]``, and
    all images sit in the right corners. A failing relation is a report entry.

    Args:
        phi: Generator images
        workers: Threads used to evaluate the relations

    Returns:
        VerificationReport: One entry per relation
    """
    return run_checks("relations", relation_checks(phi), workers)


def verify_involutive(phi: GeneratorMap, workers: int = 1) -> VerificationReport:
    """
    Check ``phi(phi(g)) == g`` for every generator ``g`` of the defining table.

    Returns:
        VerificationReport: One entry per generator
    """
    r, n = phi.dims

    def check(name: str) -> Callable[[], bool]:
        def run() -> bool:
            g = generator_element(name, r, n)
            return apply_hom(phi, apply_hom(phi, g)) == g

        return run

    items = [(f"phi(phi({name})) = {name}", check(name)) for name in generator_names(r, n)]
    return run_checks("involutive", items, workers)
