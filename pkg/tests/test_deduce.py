import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floerss.complex import hf_dims, morse_homology, validate
from floerss.deduce import (
    Constraints,
    death_analysis,
    divisibility_set,
    forced_betti,
    gysin_apriori_bound,
    gysin_solve,
    padded_witness,
    solve_exact_chain,
    support_vector,
    vanishing_feasible_nu1,
    vanishing_feasible_pages,
)
from floerss.errors import BoundTooSmall, NuTooLarge, SearchBudgetExceeded
from floerss.specseq import e_infinity, diagonal_window, laurent_for_pages
from oracles import brute_nu1_witness, floer_homology_dims


def ranks(profiles):
    return [p.ranks for p in profiles]


def test_exact_chain_examples():
    assert ranks(solve_exact_chain([1, 1])) == [(1,)]
    assert solve_exact_chain([1, 0, 1]) == []
    assert ranks(solve_exact_chain([1, 2, 1])) == [(1, 1)]
    assert ranks(solve_exact_chain([])) == [()]


def test_exact_chain_pinned_and_inexact():
    # 0 -> A -> B -> C -> 0 with the middle map pinned to zero
    assert solve_exact_chain([1, 2, 1], pinned={0: 0}) == []
    assert solve_exact_chain([2, 2, 2]) == []
    # homology allowed in the last slot; exactness in the middle still forces the second map to vanish
    assert ranks(solve_exact_chain([2, 2, 2], inexact=[2])) == [(2, 0)]
    assert ranks(solve_exact_chain([1, 1, 1], inexact=[0, 1, 2])) == [(0, 0), (0, 1), (1, 0)]
    with pytest.raises(ValueError):
        solve_exact_chain([1, -1])


@given(st.lists(st.integers(0, 3), max_size=7))
def test_exact_chain_profiles_satisfy_equations(dims):
    for prof in solve_exact_chain(dims):
        r = prof.ranks
        full = (0,) + tuple(r) + (0,)
        for i, d in enumerate(dims):
            assert d == full[i] + full[i + 1]
    # an alternating-sum obstruction: exact chains have zero Euler characteristic
    if sum((-1) ** i * d for i, d in enumerate(dims)) != 0:
        assert solve_exact_chain(dims) == []


def test_nu1_examples():
    res = vanishing_feasible_nu1((1, 1, 0, 1, 1), 4)
    assert res.feasible
    chains = {ch: p.ranks for ch, p in res.profiles}
    assert chains[(4, 1)] == (1,) and chains[(3, 0)] == (1,)
    assert not vanishing_feasible_nu1((1, 0, 0, 0, 1), 4).feasible
    assert vanishing_feasible_nu1((0, 0, 0), 2).feasible
    with pytest.raises(NuTooLarge):
        vanishing_feasible_nu1((1, 0, 0, 0, 0, 1), 3)


def test_nu1_witness_is_checked_through_the_spectral_sequence():
    res = vanishing_feasible_nu1((1, 1, 0, 1, 1), 4)
    c = res.witness
    assert validate(c) == []
    assert morse_homology(c) == (1, 1, 0, 1, 1)
    assert hf_dims(c) == (0, 0, 0, 0)
    w = diagonal_window(c.n, c.N, range(c.N))
    assert e_infinity(laurent_for_pages(c, w, 2), w).is_zero()


def test_page_search_examples():
    assert vanishing_feasible_pages((1, 0, 0, 0, 0, 1), 3).feasible
    assert vanishing_feasible_pages((1, 0, 0, 0, 0, 1), 3).label == "not excluded"
    assert not vanishing_feasible_pages((1, 0, 0, 0, 0, 1), 4).feasible
    assert not vanishing_feasible_pages((1, 1, 0, 0, 1, 1), 3).feasible
    with pytest.raises(SearchBudgetExceeded) as exc:
        vanishing_feasible_pages((1,) * 6, 2, budget=1)
    assert exc.value.explored > 1


def test_death_analysis():
    assert death_analysis([0, 5], 5, 3) == {0: [(2, "in", 5)], 5: [(2, "out", 0)]}
    top = death_analysis([0, 1, 5, 6], 6, 3)
    assert top[6] == [(2, "out", 1)] and top[5] == [(2, "out", 0)]
    assert death_analysis([], 4, 2) == {}


def test_divisibility_examples():
    assert divisibility_set([0, 11], 11, range(2, 13)) == [2, 3, 4, 6, 12]
    circle = divisibility_set([0, 1, 5, 6], 6, range(3, 13))
    assert circle == [3, 6]
    assert all(6 % N == 0 for N in circle)
    assert divisibility_set([0, 1], 1, range(2, 8)) == [2]


def test_support_vector():
    assert support_vector([0, 1, 3, 4], 4) == (1, 1, 0, 1, 1)
    with pytest.raises(ValueError):
        support_vector([5], 4)


def test_gysin_examples():
    sols = gysin_solve((1, 1, 0, 1, 1), 3, constraints=Constraints(at_least={1: 1}, pd=True))
    assert [s.beta for s in sols] == [(1, 1, 1, 1)]
    assert sols[0].cup_iso(0) and sols[0].cup_iso(1)
    sphere = gysin_solve((1, 1, 0, 0, 0, 1, 1), 5, constraints=Constraints(fix={1: 0}))
    assert [s.beta for s in sphere] == [(1, 0, 0, 0, 0, 1)]
    split = gysin_solve((1, 1, 0, 1, 1), 3, w_zero=True)
    assert [s.beta for s in split] == [(1, 0, 0, 1)]


def test_gysin_bound_reported():
    with pytest.raises(BoundTooSmall):
        gysin_solve((1, 1, 0, 1, 1), 3, constraints=Constraints(bound=0))
    with pytest.raises(ValueError):
        gysin_solve((1, 1), 3)


@given(st.lists(st.integers(0, 2), min_size=2, max_size=6), st.booleans())
def test_gysin_solutions_are_consistent(gamma, w_zero):
    k = len(gamma) - 2
    cons = Constraints(bound=sum(gamma))
    for s in gysin_solve(gamma, k, w_zero=w_zero, constraints=cons):
        assert all(b <= gysin_apriori_bound(gamma, i) for i, b in enumerate(s.beta))
        if w_zero:
            for i in range(k + 2):
                below = s.beta[i - 1] if i >= 1 else 0
                here = s.beta[i] if i <= k else 0
                assert here + below == gamma[i]


def test_gysin_split_matches_brute_enumeration():
    import itertools

    gamma = (1, 1, 0, 1, 1)
    expected = []
    for beta in itertools.product(range(3), repeat=4):
        ext = (0,) + beta + (0,)
        if all(ext[i + 1] + ext[i] == gamma[i] for i in range(5)):
            expected.append(beta)
    assert [s.beta for s in gysin_solve(gamma, 3, w_zero=True)] == expected


def test_forced_betti_examples():
    for n in range(1, 4):
        k = 2 * n + 2
        assert forced_betti(k, k, Constraints(fix={0: 1, k: 1})).vectors == ((1, 1) + (0,) * (k - 3) + (1, 1),)
    assert forced_betti(3, 5).vectors == ((0, 0, 0, 0),)
    assert forced_betti(3, 5, Constraints(fix={0: 1})).vectors == ()


def test_forced_betti_quadric_family():
    with pytest.raises(BoundTooSmall):
        forced_betti(6, 5, Constraints(fix={0: 1, 6: 1}))
    res = forced_betti(6, 5, Constraints(fix={0: 1, 6: 1}), strict=False)
    assert not res.complete
    assert res.vectors == tuple((1, t, 1, 0, 1, t, 1) for t in range(5))


@settings(max_examples=30)
@given(st.integers(1, 5), st.data())
def test_larger_bound_never_removes_solutions(k, data):
    N = data.draw(st.integers(2, k + 2))
    cons = Constraints(fix={0: 1}, bound=1)
    small = set(forced_betti(k, N, cons, strict=False, budget=10**5).vectors)
    big = set(forced_betti(k, N, Constraints(fix={0: 1}, bound=2), strict=False, budget=10**5).vectors)
    assert small <= big


@settings(max_examples=40)
@given(st.integers(1, 5), st.data())
def test_nu1_verdict_matches_brute_force(k, data):
    lo = (k + 1) // 2 + 1
    N = data.draw(st.integers(lo, k + 1))
    beta = tuple(data.draw(st.lists(st.integers(0, 2), min_size=k + 1, max_size=k + 1)))
    res = vanishing_feasible_nu1(beta, N)
    assert res.feasible == (brute_nu1_witness(beta, N) is not None)
    if res.feasible:
        assert validate(res.witness) == []
        assert floer_homology_dims(res.witness) == [0] * N


def test_padded_witness():
    rng = random.Random(9)
    c = padded_witness((1, 1, 0, 1, 1), 4, rng, extra=3)
    assert validate(c) == []
    assert morse_homology(c) == (1, 1, 0, 1, 1)
    assert sum(c.dims) == 4 + 6
    assert floer_homology_dims(c) == [0, 0, 0, 0]
    assert padded_witness((1, 0, 0, 0, 1), 4, rng) is None
