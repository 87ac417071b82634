import random

from hypothesis import given
from hypothesis import strategies as st

from floerss.complex import complex_to_json, morse_homology, validate
from floerss.generate import (
    conjugate,
    direct_sum,
    morse_differential,
    random_cochain,
    random_complex,
    random_conjugate,
)
from floerss.gf2 import BitMatrix, rank


@given(st.integers(0, 2**32 - 1), st.integers(0, 6), st.data())
def test_random_complex_is_valid(seed, n, data):
    N = data.draw(st.integers(2, n + 2))
    c = random_complex(random.Random(seed), n, N, max_dim=4)
    assert validate(c) == []
    assert all(0 <= d <= 4 for d in c.dims)


def test_same_seed_same_complex():
    a = random_complex(random.Random(11), 5, 2, max_dim=4)
    b = random_complex(random.Random(11), 5, 2, max_dim=4)
    assert complex_to_json(a) == complex_to_json(b)


def test_zero_dim_bound_gives_zero_complex():
    c = random_complex(random.Random(0), 4, 2, max_dim=0)
    assert c.dims == (0,) * 5


def test_higher_false_leaves_only_morse_part():
    c = random_complex(random.Random(5), 5, 2, max_dim=3, higher=False)
    assert all(c.op(j, i).is_zero() for j in range(1, c.nu + 1) for i in range(c.n + 1))


def test_generator_reaches_higher_operators():
    rng = random.Random(2)
    hits = 0
    for _ in range(100):
        c = random_complex(rng, 4, 2, max_dim=3)
        hits += any(not c.op(j, i).is_zero() for j in range(1, c.nu + 1) for i in range(c.n + 1))
    assert hits >= 20


def test_morse_differential_ranks():
    blocks = morse_differential([1, 2, 1], [1, 1])
    assert [rank(b) for b in blocks] == [1, 1, 0]
    assert (blocks[1] @ blocks[0]).is_zero()


def test_conjugation_and_sums_preserve_betti():
    rng = random.Random(4)
    c = random_complex(rng, 4, 3, max_dim=3)
    d = random_complex(rng, 4, 3, max_dim=3)
    assert morse_homology(random_conjugate(c, rng)) == morse_homology(c)
    s = direct_sum(c, d)
    assert validate(s) == []
    assert morse_homology(s) == tuple(a + b for a, b in zip(morse_homology(c), morse_homology(d)))
    ident = [BitMatrix.identity(k) for k in c.dims]
    assert conjugate(c, ident) == c


@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_random_cochain_squares_to_zero(seed, length):
    d = random_cochain(random.Random(seed), length, lo=-2)
    d.check()
    assert d.lo == -2 and d.hi == length - 3
