"""Shared fixtures and hypothesis strategies for the z2kit test suite."""
from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from z2kit.config import get_config
from z2kit.exactla import IntMatrix
from z2kit.staralg import StarPoly, Word
from z2kit.z2mod import Multiplicities

settings.register_profile(
    "z2kit",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture, HealthCheck.filter_too_much],
)
settings.register_profile("ci", parent=settings.get_profile("z2kit"), max_examples=300)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "z2kit"))


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch, tmp_path):
    """Run every test against default settings, away from any local .env file."""
    for name in list(os.environ):
        if name.startswith("Z2KIT_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    get_config.cache_clear()
    yield
    get_config.cache_clear()


# -- matrices --------------------------------------------------------------


def int_matrices(max_rows: int = 4, max_cols: int = 4, bound: int = 6) -> st.SearchStrategy[IntMatrix]:
    return st.integers(1, max_rows).flatmap(
        lambda rows: st.integers(1, max_cols).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            ).map(lambda data: IntMatrix(data, cols))
        )
    )


@st.composite
def unimodular_matrices(draw, n: int, max_steps: int = 30, bound: int = 5) -> IntMatrix:
    """Product of elementary row operations with factors in ``[-bound, bound]``."""
    data = IntMatrix.identity(n).to_lists()
    if n < 2:
        sign = draw(st.sampled_from([1, -1]))
        return IntMatrix([[sign * x for x in row] for row in data], n)
    steps = draw(st.integers(0, max_steps))
    for _ in range(steps):
        target = draw(st.integers(0, n - 1))
        source = draw(st.integers(0, n - 2))
        source += source >= target
        factor = draw(st.integers(-bound, bound))
        data[target] = [a + factor * b for a, b in zip(data[target], data[source])]
    if draw(st.booleans()):
        data[0] = [-x for x in data[0]]
    return IntMatrix(data, n)


@st.composite
def multiplicity_triples(draw, max_n: int = 12) -> Multiplicities:
    n3 = draw(st.integers(0, max_n // 2))
    n1 = draw(st.integers(0, max_n - 2 * n3))
    n2 = draw(st.integers(0, max_n - 2 * n3 - n1))
    return Multiplicities(n1=n1, n2=n2, n3=n3)


# -- star polynomials ------------------------------------------------------


def words(r: int, n: int, max_length: int = 3) -> st.SearchStrategy[Word]:
    letters = st.lists(st.integers(1, n), max_size=max_length).map(tuple)
    return st.builds(Word, st.integers(1, r), st.integers(1, r), letters, letters)


def star_polys(r: int = 2, n: int = 2, max_terms: int = 4, max_length: int = 3) -> st.SearchStrategy[StarPoly]:
    coefficient = st.integers(-3, 3).filter(bool)
    terms = st.lists(st.tuples(words(r, n, max_length), coefficient), max_size=max_terms)
    return terms.map(lambda items: StarPoly(r, n, items))
