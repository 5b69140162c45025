"""The generated multiplication table against an independent recursion."""

import numpy as np

import oracles
from jordanmm._table import MUL_INDEX, MUL_SIGN, STRUCTURE_TENSOR, cd_multiply


def test_full_table_matches_tuple_oracle():
    for i in range(8):
        for j in range(8):
            expected = oracles.omul(oracles.obasis(i), oracles.obasis(j))
            got = np.zeros(8)
            got[MUL_INDEX[i, j]] = MUL_SIGN[i, j]
            assert np.array_equal(got, np.asarray(expected)), (i, j)


def test_convention_fixtures():
    # e1 e2 = e3 inside the quaternion block, e4 the doubling unit
    assert MUL_INDEX[1, 2] == 3 and MUL_SIGN[1, 2] == 1
    assert MUL_INDEX[1, 4] == 5 and MUL_SIGN[1, 4] == 1
    assert MUL_INDEX[2, 4] == 6 and MUL_SIGN[2, 4] == 1
    assert MUL_INDEX[3, 4] == 7 and MUL_SIGN[3, 4] == 1
    for i in range(1, 8):
        assert MUL_INDEX[i, i] == 0 and MUL_SIGN[i, i] == -1


def test_quaternion_subtable():
    sign = np.array([
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
    ])
    index = np.array([
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ])
    assert np.array_equal(MUL_SIGN[:4, :4], sign)
    assert np.array_equal(MUL_INDEX[:4, :4], index)


def test_imaginary_units_anticommute():
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            assert MUL_INDEX[i, j] == MUL_INDEX[j, i]
            assert MUL_SIGN[i, j] == -MUL_SIGN[j, i]


def test_structure_tensor_consistent_with_signed_table():
    dense = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            dense[i, j, MUL_INDEX[i, j]] = MUL_SIGN[i, j]
    assert np.array_equal(dense, STRUCTURE_TENSOR)


def test_doubling_recursion_on_generic_vectors(rng):
    for _ in range(50):
        a = rng.uniform(-1, 1, 8)
        b = rng.uniform(-1, 1, 8)
        expected = np.asarray(oracles.omul(tuple(a), tuple(b)))
        assert np.allclose(cd_multiply(a, b), expected, atol=1e-14)
