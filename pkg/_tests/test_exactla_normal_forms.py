"""Hermite and Smith normal forms, and the IntMatrix value type."""
from __future__ import annotations

import pytest
from hypothesis import given

from z2kit.exactla import (
    IntMatrix,
    MatrixFormatError,
    NotUnimodularError,
    ShapeMismatchError,
    hnf,
    snf,
)

from .conftest import int_matrices


def is_row_hermite(h: IntMatrix) -> bool:
    last_pivot = -1
    seen_zero_row = False
    for i, row in enumerate(h.entries):
        nonzero = [j for j, x in enumerate(row) if x]
        if not nonzero:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        pivot = nonzero[0]
        if pivot <= last_pivot or row[pivot] <= 0:
            return False
        if any(not 0 <= h[k, pivot] < row[pivot] for k in range(i)):
            return False
        last_pivot = pivot
    return True


def test_hnf_small_example():
    form = hnf(IntMatrix.from_rows([[2, 4], [1, 3]]))

    assert form.h == IntMatrix.from_rows([[1, 1], [0, 2]])
    assert form.u @ IntMatrix.from_rows([[2, 4], [1, 3]]) == form.h
    assert form.rank == 2
    assert form.pivots == (0, 1)


@given(int_matrices())
def test_hnf_transform_is_unimodular(a):
    form = hnf(a)

    assert form.u @ a == form.h
    assert form.u.is_unimodular()
    assert is_row_hermite(form.h)


def test_snf_known_invariants():
    m = IntMatrix.from_rows([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])

    form = snf(m)

    assert form.diagonal == (1, 10, 30, 0)
    assert form.invariants == (1, 10, 30)
    assert form.rank == 3
    assert form.u @ m @ form.v == form.d


def test_hnf_combines_coprime_rows():
    a = IntMatrix.from_rows([[4, 1], [6, 0], [-9, 2]])

    form = hnf(a)

    assert form.h.column(0) == (1, 0, 0)
    assert form.u @ a == form.h
    assert form.u.is_unimodular()


@pytest.mark.parametrize(
    ("rows", "diagonal"),
    [
        ([[3, 0, 0, 0], [0, 0, 0, 0], [0, 0, 2, 0]], (1, 6, 0)),
        ([[0, -2]], (2,)),
        ([[0], [-2]], (2,)),
        ([[-4, 0], [0, -6]], (2, 12)),
        ([[0, 0], [0, 5]], (5, 0)),
    ],
)
def test_snf_sign_and_order(rows, diagonal):
    a = IntMatrix.from_rows(rows)

    form = snf(a)

    assert form.diagonal == diagonal
    assert form.u @ a @ form.v == form.d
    assert form.u.is_unimodular() and form.v.is_unimodular()


@given(int_matrices())
def test_snf_divisibility_chain(a):
    form = snf(a)

    assert form.u @ a @ form.v == form.d
    assert form.u.is_unimodular() and form.v.is_unimodular()
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j:
                assert form.d[i, j] == 0
    invariants = form.invariants
    assert all(d > 0 for d in invariants)
    assert all(b % a == 0 for a, b in zip(invariants, invariants[1:]))


def test_empty_matrices():
    assert IntMatrix.zeros(0, 0).det() == 1
    assert hnf(IntMatrix.zeros(0, 3)).rank == 0
    assert snf(IntMatrix.zeros(2, 0)).invariants == ()


def test_inverse_of_unimodular_matrix():
    a = IntMatrix.from_rows([[2, 1], [1, 1]])

    assert a.inverse() == IntMatrix.from_rows([[1, -1], [-1, 2]])
    assert a @ a.inverse() == IntMatrix.identity(2)


def test_inverse_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError):
        IntMatrix.from_rows([[2, 0], [0, 1]]).inverse()


def test_matmul_shape_mismatch_is_a_value_error():
    with pytest.raises(ShapeMismatchError) as excinfo:
        IntMatrix.identity(2) @ IntMatrix.identity(3)

    assert isinstance(excinfo.value, ValueError)


def test_matrix_vector_product():
    assert IntMatrix.from_rows([[1, 2], [3, 4]]) @ (1, -1) == (-1, -1)


def test_block_diagonal_and_stacking():
    a = IntMatrix.from_rows([[1, 2]])
    b = IntMatrix.from_rows([[3]])

    assert IntMatrix.block_diagonal([a, b]) == IntMatrix.from_rows([[1, 2, 0], [0, 0, 3]])
    assert a.hstack(b) == IntMatrix.from_rows([[1, 2, 3]])
    assert a.vstack(IntMatrix.from_rows([[5, 6]])).shape == (2, 2)
    assert IntMatrix.from_columns([(1, 2), (3, 4)], 2) == IntMatrix.from_rows([[1, 3], [2, 4]])


def test_arbitrary_precision_entries_survive_payloads():
    big = 123456789012345678901234567890
    payload = {"rows": 1, "cols": 2, "entries": [[str(big), "-2"]]}

    m = IntMatrix.from_payload(payload)

    assert m[0, 0] == big
    assert (m.scale(big) @ (1, 0))[0] == big * big
    assert m.to_payload() == payload


def test_payload_accepts_integer_entries():
    assert IntMatrix.from_payload({"rows": 1, "cols": 1, "entries": [[7]]}) == IntMatrix.from_rows([[7]])


@pytest.mark.parametrize(
    "payload",
    [
        {"rows": 2, "cols": 1, "entries": [["1"]]},
        {"rows": 1, "cols": 2, "entries": [["1"]]},
        {"rows": 1, "cols": 1, "entries": [["x"]]},
        {"rows": 1, "cols": 1, "entries": [[1.5]]},
        {"cols": 1, "entries": [["1"]]},
        [[1, 2]],
    ],
)
def test_malformed_payloads(payload):
    with pytest.raises(MatrixFormatError) as excinfo:
        IntMatrix.from_payload(payload)

    assert excinfo.value.exit_code == 1


def test_ragged_rows_rejected():
    with pytest.raises(MatrixFormatError):
        IntMatrix.from_rows([[1, 2], [3]])
