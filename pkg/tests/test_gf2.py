import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from floerss.errors import DimensionMismatch, ParseError
from floerss.gf2 import (
    BitMatrix,
    Echelon,
    image_basis,
    inverse,
    kernel_basis,
    quotient_dim,
    rank,
    solve,
    span_rank,
    vec_from_bits,
    vec_to_bits,
)
from oracles import rank_lists

TRIANGLE = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


@st.composite
def matrices(draw, max_rows=8, max_cols=8):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BitMatrix(r, c, tuple(rows))


# -- worked examples ------------------------------------------------------------


def test_rank_examples():
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(BitMatrix.zeros(4, 7)) == 0
    assert rank(TRIANGLE) == 2


def test_kernel_examples():
    assert kernel_basis(BitMatrix.identity(2)).shape == (2, 0)
    assert rank(kernel_basis(BitMatrix.zeros(2, 3))) == 3
    k = kernel_basis(TRIANGLE)
    assert k.shape == (3, 1)
    assert [row[0] for row in k.to_lists()] == [1, 1, 1]


def test_image_examples():
    assert image_basis(BitMatrix.identity(3)).shape == (3, 3)
    assert image_basis(BitMatrix.zeros(4, 7)).shape == (4, 0)
    assert image_basis(TRIANGLE).shape == (3, 2)


def test_quotient_examples():
    eye = BitMatrix.identity(3)
    first = BitMatrix.from_columns([0b001], 3)
    assert quotient_dim(eye, first) == 2
    assert quotient_dim(eye, eye) == 0
    big = BitMatrix.from_columns([0b001, 0b010], 3)
    small = BitMatrix.from_columns([0b011], 3)
    assert quotient_dim(big, small) == 1


def test_quotient_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        quotient_dim(BitMatrix.identity(2), BitMatrix.identity(3))


def test_solve_examples():
    assert solve(BitMatrix.identity(3), (1, 0, 1)) == (1, 0, 1)
    assert solve(BitMatrix.zeros(2, 2), (1, 0)) is None
    assert solve(BitMatrix.from_lists([[1, 1], [0, 1]]), (1, 1)) == (0, 1)


def test_solve_length_checked():
    with pytest.raises(DimensionMismatch):
        solve(BitMatrix.identity(2), (1, 0, 0))


def test_zero_sized_matrices():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        m = BitMatrix.zeros(r, c)
        assert rank(m) == 0
        assert kernel_basis(m).shape == (c, c)
        assert (m @ BitMatrix.zeros(c, 2)).shape == (r, 2)


def test_constructor_validation():
    with pytest.raises(DimensionMismatch):
        BitMatrix(1, 2, (0b100,))
    with pytest.raises(DimensionMismatch):
        BitMatrix(2, 2, (0,))
    with pytest.raises(DimensionMismatch):
        BitMatrix.from_lists([[1, 0], [1]])
    with pytest.raises(ParseError):
        BitMatrix.from_strings(["102"])
    with pytest.raises(DimensionMismatch):
        BitMatrix.identity(2) @ BitMatrix.identity(3)


def test_string_round_trip_is_column_ordered():
    m = BitMatrix.from_strings(["100", "011"])
    assert m[0, 0] == 1 and m[1, 2] == 1 and m[0, 2] == 0
    assert m.to_strings() == ["100", "011"]


def test_bit_vectors():
    assert vec_from_bits([1, 0, 1]) == 0b101
    assert vec_to_bits(0b101, 4) == (1, 0, 1, 0)


def test_echelon_tracks_combinations():
    e = Echelon()
    e.add(0b011, 0b01)
    e.add(0b110, 0b10)
    residue, tag = e.reduce(0b101)
    assert residue == 0 and tag == 0b11
    assert e.contains(0b101) and not e.contains(0b001)
    assert span_rank([0b011, 0b110, 0b101]) == 2


def test_inverse_round_trip():
    rng = random.Random(3)
    for n in range(6):
        m = BitMatrix.random_invertible(n, rng)
        assert m @ inverse(m) == BitMatrix.identity(n)
    with pytest.raises(DimensionMismatch):
        inverse(BitMatrix.zeros(2, 2))


def test_rank_matches_enumeration_on_all_3x3():
    for rows in itertools.product(range(8), repeat=3):
        m = BitMatrix(3, 3, rows)
        image = {m.apply(x) for x in range(8)}
        assert 1 << rank(m) == len(image)


# -- properties -------------------------------------------------------------------


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols
    assert (m @ kernel_basis(m)).is_zero()


@given(matrices())
def test_rank_matches_list_oracle(m):
    assert rank(m) == rank_lists(m.to_lists())


@given(matrices())
def test_image_columns_are_solvable(m):
    img = image_basis(m)
    assert img.cols == rank(m)
    for col in img.columns():
        x = solve(m, col)
        assert x is not None
        assert m.apply(vec_from_bits(x)) == col


@given(matrices(), st.randoms(use_true_random=False))
def test_rank_permutation_invariant(m, rnd):
    rp = list(range(m.rows))
    cp = list(range(m.cols))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    assert rank(m.permute(rp, cp)) == rank(m)


@given(st.data())
def test_quotient_identity(data):
    r = data.draw(st.integers(0, 7))
    cb = data.draw(st.integers(0, 6))
    cs = data.draw(st.integers(0, 6))
    big = BitMatrix.from_columns(data.draw(st.lists(st.integers(0, (1 << r) - 1), min_size=cb, max_size=cb)), r)
    small = BitMatrix.from_columns(data.draw(st.lists(st.integers(0, (1 << r) - 1), min_size=cs, max_size=cs)), r)
    assert quotient_dim(big, small) + rank(small) == rank(big.hstack(small))


@given(matrices(), matrices())
def test_transpose_and_product(a, b):
    assert rank(a.T) == rank(a)
    assert a.T.T == a
    if a.cols == b.rows:
        assert (a @ b).T == b.T @ a.T
        assert rank(a @ b) <= min(rank(a), rank(b))
