"""Normal forms and the *-algebra laws of StarPoly."""
from __future__ import annotations

import pytest
from hypothesis import given, settings

from z2kit.config import get_config
from z2kit.staralg import (
    DimensionMismatchError,
    GeneratorIndexError,
    StarPoly,
    TermCapExceededError,
    Word,
    add,
    adjoint,
    equal,
    example5,
    mul,
    normalize,
    parse,
    word_product,
)

from .conftest import star_polys


def test_unit_relation_has_one_normal_form():
    one = StarPoly.one(1, 2)
    expanded = parse("s[1] s[1]* + s[2] s[2]*", 1, 2)

    assert dict(one.terms) == dict(expanded.terms) == {Word(1, 1): 1}


def test_isometry_relation():
    assert parse("s[1] s[1]* s[1]", 1, 2) == parse("s[1]", 1, 2)
    assert parse("s[1]* s[1]", 1, 3) == 1


def test_cuntz_orthogonality():
    assert parse("s[1]* s[2]").is_zero()


def test_sum_of_range_projections_is_one():
    assert parse("s[1] s[1]* + s[2] s[2]* + s[3] s[3]* + s[4] s[4]*") == 1


def test_partial_sum_is_not_one():
    assert parse("s[1] s[1]* + s[2] s[2]*", 1, 3) != 1


def test_diagonal_images_of_the_example_sum_to_one():
    phi = example5()

    assert phi.f(1, 1) + phi.f(2, 2) + phi.f(3, 3) == StarPoly.one(3, 4)


def test_equal_on_example_relations():
    phi = example5()

    assert equal(phi.f(1, 2) * phi.f(1, 2).adjoint(), phi.f(1, 1))
    assert equal(phi.v(1).adjoint() * phi.v(1), phi.f(1, 1))
    assert not equal(StarPoly.isometry(1, 2, 1), StarPoly.isometry(1, 2, 2))


def test_adjoint_of_a_word():
    assert adjoint(parse("e[1,2] s[1]", 2, 2)) == parse("e[2,1] s[1]*", 2, 2)


def test_range_projection():
    assert parse("(e[1,1] s[1]) (e[1,1] s[1])*", 1, 2) == parse("e[1,1] p[1]", 1, 2)


def test_mismatched_matrix_units_vanish():
    assert mul(StarPoly.matrix_unit(2, 2, 1, 2), StarPoly.matrix_unit(2, 2, 1, 2)).is_zero()
    assert word_product(Word(1, 2), Word(1, 2)) is None


def test_word_product_contracts_common_prefix():
    assert word_product(Word(1, 1, (1,), (1, 2)), Word(1, 1, (1,), ())) == Word(1, 1, (1,), (2,))
    assert word_product(Word(1, 1, (), (1,)), Word(1, 1, (1, 2), ())) == Word(1, 1, (2,), ())
    assert word_product(Word(1, 1, (), (1,)), Word(1, 1, (2,), ())) is None


def test_integer_arithmetic():
    s1 = StarPoly.isometry(1, 2, 1)

    assert 2 * s1 - s1 == s1
    assert (1 - s1 * s1.H) == StarPoly.projection(1, 2, 2)
    assert s1**0 == 1
    assert add(s1, -s1).is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError) as excinfo:
        StarPoly.one(1, 2) + StarPoly.one(1, 3)

    assert excinfo.value.exit_code == 2
    with pytest.raises(DimensionMismatchError):
        equal(StarPoly.one(2, 2), StarPoly.one(1, 2))


def test_invalid_dimensions_and_indices():
    with pytest.raises(GeneratorIndexError):
        StarPoly(1, 1)
    with pytest.raises(GeneratorIndexError):
        StarPoly.word(2, 2, Word(1, 3))
    with pytest.raises(GeneratorIndexError):
        StarPoly.word(2, 2, Word(1, 1, (3,)))


def test_term_cap():
    text = "s[1] s[1] s[1] s[1]* s[1]* s[1]* + 1"

    with pytest.raises(TermCapExceededError) as excinfo:
        parse(text, 1, 2, term_cap=5)

    assert excinfo.value.cap == 5
    assert len(parse(text, 1, 2)) == 8


def test_term_cap_follows_configuration(monkeypatch):
    monkeypatch.setenv("Z2KIT_TERM_CAP", "3")

    get_config.cache_clear()
    with pytest.raises(TermCapExceededError):
        parse("s[1] s[1] s[1]* s[1]* + 1", 1, 2)


def test_printing_parses_back():
    p = parse("2 e[1,2] s[1] s[2]* - e[2,2] p[2] + e[2,1] s[1]*", 2, 2)

    assert parse(str(p), 2, 2) == p
    assert str(StarPoly.zero(1, 2)) == "0"
    assert str(parse("e[1,2] s[1]", 2, 2)) == "e[1,2] s[1]"


@given(star_polys())
def test_normalize_is_idempotent(p):
    assert dict(normalize(normalize(p)).terms) == dict(normalize(p).terms)
    assert dict(normalize(p).terms) == dict(p.terms)


@given(star_polys())
def test_grading_is_preserved(p):
    degrees = {(w.j, w.k, w.degree) for w, _ in p}
    raw = [(w, c) for w, c in p]
    expanded = [(e, c) for w, c in raw for e in w.expand(2)]

    assert {(w.j, w.k, w.degree) for w, _ in StarPoly(2, 2, expanded)} == degrees
    assert StarPoly(2, 2, expanded) == p


@given(star_polys(), star_polys())
def test_involution_laws(p, q):
    assert p.adjoint().adjoint() == p
    assert (p * q).adjoint() == q.adjoint() * p.adjoint()
    assert (p + q).adjoint() == p.adjoint() + q.adjoint()


@settings(max_examples=40)
@given(star_polys(max_terms=3), star_polys(max_terms=3), star_polys(max_terms=3))
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p


@pytest.mark.slow
@settings(max_examples=1000)
@given(star_polys(r=1, n=2), star_polys(r=1, n=2), star_polys(r=1, n=2))
def test_ring_laws_extended(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p * q).adjoint() == q.adjoint() * p.adjoint()
    assert dict(normalize(p).terms) == dict(p.terms)
