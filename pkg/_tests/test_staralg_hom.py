"""Generator maps: extension to homomorphisms, relation checks and mutations."""
from __future__ import annotations

import pytest
from hypothesis import given, settings

from z2kit.staralg import (
    FLIP_TABLE,
    DimensionMismatchError,
    GeneratorMap,
    GeneratorMapError,
    Mutation,
    StarPoly,
    apply_hom,
    example5,
    flip_map,
    generator_element,
    generator_names,
    identity_map,
    load_builtin,
    mutate,
    parse,
    verify_involutive,
    verify_relations,
)

from .conftest import star_polys


def test_generator_names():
    assert generator_names(2, 2) == ["e[1,1]x1", "e[2,2]x1", "e[1,2]x1", "e[1,1]xs[1]", "e[1,1]xs[2]"]
    assert len(generator_names(3, 4)) == 9


def test_generator_element():
    assert generator_element("e[1,2]x1", 2, 2) == parse("e[1,2]", 2, 2)
    assert generator_element("e[1,1] x s[2]", 2, 2) == parse("e[1,1] s[2]", 2, 2)
    with pytest.raises(GeneratorMapError):
        generator_element("e[1,1]xq", 2, 2)


def test_apply_hom_on_a_corner_isometry():
    phi = example5()

    image = apply_hom(phi, parse("e[1,1] s[1]", 3, 4))

    assert image == parse("e[2,2] s[1] + e[2,3] s[2]", 3, 4)


def test_apply_hom_rejects_other_algebras():
    with pytest.raises(DimensionMismatchError):
        apply_hom(example5(), StarPoly.one(1, 2))


@given(star_polys(r=2, n=2))
def test_identity_map_fixes_everything(p):
    assert apply_hom(identity_map(2, 2), p) == p


@settings(max_examples=25)
@given(star_polys(r=3, n=4, max_terms=2, max_length=2), star_polys(r=3, n=4, max_terms=2, max_length=2))
def test_example_map_is_a_star_homomorphism(p, q):
    phi = example5()

    assert apply_hom(phi, p * q) == apply_hom(phi, p) * apply_hom(phi, q)
    assert apply_hom(phi, p.adjoint()) == apply_hom(phi, p).adjoint()
    assert apply_hom(phi, apply_hom(phi, p)) == p


def test_example_map_verifies():
    phi = example5()

    relations = verify_relations(phi)
    involutive = verify_involutive(phi)

    assert relations.passed, relations.render()
    assert involutive.passed, involutive.render()
    assert len(relations) == 22
    assert len(involutive) == 9
    assert involutive.checks[0].name == "phi(phi(e[1,1]x1)) = e[1,1]x1"


@pytest.mark.parametrize("build", [lambda: identity_map(2, 3), flip_map], ids=["identity", "flip"])
def test_other_maps_verify(build):
    phi = build()

    assert verify_relations(phi).passed
    assert verify_involutive(phi).passed


def test_worker_pool_keeps_order():
    phi = example5()

    assert verify_relations(phi, workers=4) == verify_relations(phi)
    assert verify_involutive(phi, workers=3) == verify_involutive(phi)


@pytest.mark.parametrize(
    ("mutation", "failing"),
    [
        (Mutation.ZERO_V1, "v[1]* v[1] = f[1,1]"),
        (Mutation.SWAP_F22_F33, "f[1,2]* f[1,2] = f[2,2]"),
    ],
)
def test_mutations_breaking_relations(mutation, failing):
    report = verify_relations(mutate(example5(), mutation))

    assert not report.passed
    assert not report[failing].passed


def test_swapping_isometries_keeps_relations_but_not_involutivity():
    phi = mutate(example5(), "swap-v2-v3")

    assert verify_relations(phi).passed
    assert not verify_involutive(phi).passed


@pytest.mark.parametrize("mutation", [Mutation.NEGATE_V1, Mutation.NEGATE_F12])
def test_sign_mutations_break_involutivity(mutation):
    assert not verify_involutive(mutate(example5(), mutation)).passed


def test_mutate_leaves_the_original_untouched():
    phi = example5()
    before = phi.v(1)

    mutate(phi, Mutation.NEGATE_V1)

    assert phi.v(1) == before


def test_mutate_errors():
    with pytest.raises(GeneratorMapError, match="Unknown mutation"):
        mutate(example5(), "shuffle")
    with pytest.raises(GeneratorMapError, match="e\\[3,3\\]x1"):
        mutate(flip_map(), Mutation.SWAP_F22_F33)


def test_load_builtin():
    assert load_builtin("example5").dims == (3, 4)
    with pytest.raises(GeneratorMapError) as excinfo:
        load_builtin("nope")

    assert excinfo.value.exit_code == 1
    assert "example5" in str(excinfo.value)


def test_generator_map_from_bare_mapping():
    phi = GeneratorMap.from_payload(FLIP_TABLE)

    assert phi.dims == (2, 2)
    assert phi.v(1) == parse("e[1,1] s[2]", 2, 2)
    assert phi.f(2, 1) == parse("e[2,1]", 2, 2)


def test_generator_map_payload_round_trip():
    phi = example5()

    again = GeneratorMap.from_payload(phi.to_payload())

    assert again.dims == phi.dims
    assert again.images == phi.images


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"images": []},
        {k: v for k, v in FLIP_TABLE.items() if k != "e[1,2]x1"},
        {**FLIP_TABLE, "e[1,1]xq": "1"},
        {**FLIP_TABLE, "e[1,1]x1": "e[1,"},
        {**FLIP_TABLE, "e[1,1]x1": 1},
        {"images": FLIP_TABLE, "matrix_size": 0},
    ],
)
def test_generator_map_payload_errors(payload):
    with pytest.raises(GeneratorMapError):
        GeneratorMap.from_payload(payload)
