"""Truncated Fock representation as an independent check of the normal form."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from sympy import eye

from z2kit.staralg import (
    DimensionMismatchError,
    FockWindowError,
    StarPoly,
    Word,
    equal,
    fock_agrees,
    fock_basis,
    fock_image,
    isometry_matrix,
    parse,
)

from .conftest import star_polys


def test_fock_basis_order():
    assert fock_basis(2, 2) == ((), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2))


def test_isometry_matrix_is_an_isometry_below_the_depth():
    s1 = isometry_matrix(2, 1, 3)
    below = len(fock_basis(2, 2))

    assert s1.shape == (15, 15)
    assert (s1.T * s1)[:below, :below].tolist() == eye(below).tolist()
    assert s1[1, 0] == 1


def test_window_must_exceed_the_longest_adjoint_word():
    with pytest.raises(FockWindowError) as excinfo:
        fock_image(parse("s[1]*"), 1)

    assert excinfo.value.required == 2
    assert excinfo.value.exit_code == 2
    assert isinstance(excinfo.value, ValueError)
    assert fock_image(parse("s[1]*"), 2).shape == (7, 4)


def test_depth_must_reach_the_longest_output():
    with pytest.raises(FockWindowError, match="depth 1 is below the required 2"):
        fock_image(parse("s[1]"), 1, depth=1)


def test_image_shape():
    assert fock_image(StarPoly.one(1, 2), 1).shape == (3, 2)
    assert fock_image(StarPoly.one(2, 2), 2, depth=3).shape == (30, 8)


def test_unit_relation_in_the_representation():
    one = StarPoly.one(1, 3)

    assert fock_agrees(parse("s[1] s[1]* + s[2] s[2]* + s[3] s[3]*", 1, 3), one)
    assert not fock_agrees(parse("s[1] s[1]* + s[2] s[2]*", 1, 3), one)
    assert not fock_agrees(StarPoly.isometry(1, 2, 1), StarPoly.isometry(1, 2, 2))


def test_fock_agrees_rejects_other_algebras():
    with pytest.raises(DimensionMismatchError):
        fock_agrees(StarPoly.one(1, 2), StarPoly.one(1, 3))


def test_short_words_are_separated_exactly_when_unequal():
    letters = [w for length in range(3) for w in itertools.product((1, 2), repeat=length)]
    polys = [StarPoly.word(1, 2, Word(1, 1, mu, nu)) for mu in letters for nu in letters]
    images = [fock_image(p, 3, 5) for p in polys]

    assert len(polys) == 49
    for (p, a), (q, b) in itertools.combinations(zip(polys, images), 2):
        assert (a == b) == equal(p, q)


@given(star_polys(max_length=2), star_polys(max_length=2))
def test_representation_agrees_with_the_normal_form(p, q):
    assert fock_agrees(p, q) == equal(p, q)
    assert fock_agrees(p + q, q + p)
