"""Dimension-level deduction: which Betti vectors allow vanishing Floer homology.

Everything here works with nonnegative integers only (ranks of maps in exact
sequences, dimensions of page cells).  Over a field any rank profile that
satisfies the exactness equations is realised by matrices, and
:func:`witness_complex` builds those matrices so the arithmetic can be checked
against the linear algebra in :mod:`floerss.complex` and :mod:`floerss.specseq`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .complex import FloerComplex, nu_of
from .errors import BoundTooSmall, NuTooLarge, SearchBudgetExceeded
from .gf2 import BitMatrix

__all__ = [
    "RankProfile",
    "PageProfile",
    "Nu1Result",
    "PagesResult",
    "Constraints",
    "GysinSolution",
    "ForcedResult",
    "solve_exact_chain",
    "chains",
    "vanishing_feasible_nu1",
    "vanishing_feasible_pages",
    "death_analysis",
    "divisibility_set",
    "support_vector",
    "gysin_solve",
    "forced_betti",
    "witness_complex",
    "padded_witness",
]

DEFAULT_BOUND = 4
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class RankProfile:
    """``ranks[i]`` is the rank of the map out of position ``i`` of a chain."""

    dims: tuple[int, ...]
    ranks: tuple[int, ...]


def solve_exact_chain(
    dims: Sequence[int],
    inexact: Iterable[int] = (),
    pinned: Mapping[int, int] | None = None,
) -> list[RankProfile]:
    """All rank profiles of ``0 -> V_0 -> V_1 -> ... -> V_m -> 0``.

    Exactness at every position not listed in ``inexact`` means
    ``dims[i] = r_{i-1} + r_i``; inexact positions only need
    ``r_{i-1} + r_i <= dims[i]`` (composites vanish).  ``pinned`` fixes
    individual ranks.  Profiles come out in lexicographic order.
    """
    dims = tuple(int(d) for d in dims)
    if any(d < 0 for d in dims):
        raise ValueError("dimensions must be nonnegative")
    m = len(dims)
    if m == 0:
        return [RankProfile((), ())]
    loose = set(inexact)
    pinned = dict(pinned or {})
    out: list[RankProfile] = []
    ranks: list[int] = []

    def ok(pos: int, before: int, after: int) -> bool:
        if pos in loose:
            return before + after <= dims[pos]
        return before + after == dims[pos]

    def rec(i: int) -> None:
        before = ranks[i - 1] if i > 0 else 0
        if i == m - 1:
            if ok(i, before, 0):
                out.append(RankProfile(dims, tuple(ranks)))
            return
        cap = min(dims[i], dims[i + 1])
        if i in pinned:
            options: Iterable[int] = [pinned[i]] if 0 <= pinned[i] <= cap else []
        elif i in loose:
            options = range(0, cap + 1)
        else:
            options = [dims[i] - before] if 0 <= dims[i] - before <= cap else []
        for r in options:
            if not ok(i, before, r):
                continue
            ranks.append(r)
            rec(i + 1)
            ranks.pop()

    rec(0)
    return out


def chains(k: int, N: int, r: int = 1) -> list[tuple[int, ...]]:
    """Degree chains followed by the page-``r`` differential ``i -> i + 1 - rN``.

    Each chain is listed from its top degree downwards.
    """
    step = r * N - 1
    out = []
    for top in range(k, max(k - step, -1), -1):
        out.append(tuple(range(top, -1, -step)))
    return sorted(out, key=lambda ch: -ch[0])


@dataclass(frozen=True)
class Nu1Result:
    feasible: bool
    beta: tuple[int, ...]
    N: int
    profiles: tuple[tuple[tuple[int, ...], RankProfile], ...] = ()
    witness: FloerComplex | None = None


def witness_complex(
    beta: Sequence[int],
    N: int,
    profiles: Sequence[tuple[Sequence[int], RankProfile]],
) -> FloerComplex:
    """Minimal model: ``C = H``, ``∂_0 = 0``, ``∂_1`` in block echelon form along the chains."""
    k = len(beta) - 1
    blocks = []
    where: dict[int, tuple[int, int]] = {}
    for chain, prof in profiles:
        for pos, deg in enumerate(chain[:-1]):
            before = prof.ranks[pos - 1] if pos > 0 else 0
            where[deg] = (before, prof.ranks[pos])
    for i in range(k + 1):
        t = i + 1 - N
        tgt = beta[t] if 0 <= t <= k else 0
        rows = [0] * tgt
        if i in where and tgt:
            before, r = where[i]
            for a in range(r):
                rows[a] = 1 << (before + a)
        blocks.append(BitMatrix(tgt, beta[i], tuple(rows)))
    zero = [BitMatrix.zeros(beta[i + 1] if i < k else 0, beta[i]) for i in range(k + 1)]
    return FloerComplex(k, N, tuple(beta), {0: zero, 1: blocks})


def vanishing_feasible_nu1(beta: Sequence[int], N: int) -> Nu1Result:
    """Exactness of every page-1 chain, with the witness complex when feasible."""
    beta = tuple(int(b) for b in beta)
    k = len(beta) - 1
    nu = nu_of(k, N)
    if nu >= 2:
        raise NuTooLarge(f"ν = {nu}; use vanishing_feasible_pages")
    if nu == 0:
        return Nu1Result(not any(beta), beta, N, (), FloerComplex(k, N, beta) if not any(beta) else None)
    found = []
    for ch in chains(k, N):
        sols = solve_exact_chain([beta[d] for d in ch])
        if not sols:
            return Nu1Result(False, beta, N)
        found.append((ch, sols[0]))
    return Nu1Result(True, beta, N, tuple(found), witness_complex(beta, N, found))


@dataclass(frozen=True)
class PageProfile:
    """Per page ``r = 1..ν``: cell dimensions by Morse degree and ranks of ``δ_r`` out of each degree."""

    N: int
    dims: tuple[tuple[int, ...], ...]
    ranks: tuple[Mapping[int, int], ...]


@dataclass(frozen=True)
class PagesResult:
    feasible: bool
    beta: tuple[int, ...]
    N: int
    nu: int
    witness: PageProfile | None = None
    explored: int = 0

    @property
    def label(self) -> str:
        if not self.feasible:
            return "excluded"
        return "exists" if self.nu <= 1 else "not excluded"


def _page_rank_choices(v: tuple[int, ...], N: int, r: int, last: bool):
    """Rank assignments for ``δ_r`` on degree vector ``v``, as (ranks, next vector)."""
    k = len(v) - 1
    per_chain = []
    for ch in chains(k, N, r):
        dims = [v[d] for d in ch]
        if last:
            sols = solve_exact_chain(dims)
        else:
            sols = solve_exact_chain(dims, inexact=range(len(dims)))
        if not sols:
            return
        per_chain.append((ch, sols))
    for combo in itertools.product(*(s for _, s in per_chain)):
        nxt = list(v)
        ranks = {}
        for (ch, _), prof in zip(per_chain, combo):
            for pos, deg in enumerate(ch):
                before = prof.ranks[pos - 1] if pos > 0 else 0
                after = prof.ranks[pos] if pos < len(ch) - 1 else 0
                nxt[deg] -= before + after
                if pos < len(ch) - 1:
                    ranks[deg] = after
        yield ranks, tuple(nxt)


def vanishing_feasible_pages(beta: Sequence[int], N: int, budget: int = DEFAULT_BUDGET) -> PagesResult:
    """Search all page profiles whose page ``ν+1`` vanishes."""
    beta = tuple(int(b) for b in beta)
    k = len(beta) - 1
    nu = nu_of(k, N)
    if nu == 0:
        return PagesResult(not any(beta), beta, N, 0, PageProfile(N, (beta,), ()) if not any(beta) else None)
    explored = 0
    memo: dict[tuple[int, tuple[int, ...]], list | None] = {}

    def rec(r: int, v: tuple[int, ...]) -> list | None:
        nonlocal explored
        if not any(v):
            return []
        if r > nu:
            return None
        key = (r, v)
        if key in memo:
            return memo[key]
        found = None
        for ranks, nxt in _page_rank_choices(v, N, r, last=(r == nu)):
            explored += 1
            if explored > budget:
                raise SearchBudgetExceeded(f"page search exceeded {budget} nodes", explored)
            tail = rec(r + 1, nxt)
            if tail is not None:
                found = [(v, ranks)] + tail
                break
        memo[key] = found
        return found

    path = rec(1, beta)
    if path is None:
        return PagesResult(False, beta, N, nu, None, explored)
    dims = [v for v, _ in path] + [(0,) * (k + 1)]
    ranks = [rk for _, rk in path]
    return PagesResult(True, beta, N, nu, PageProfile(N, tuple(dims), tuple(ranks)), explored)


def death_analysis(support: Iterable[int], k: int, N: int) -> dict[int, list[tuple[int, str, int]]]:
    """For each supported degree, the pages and partner degrees that could cancel it.

    Entries are ``(r, "out", q + 1 - rN)`` and ``(r, "in", q - 1 + rN)`` for
    ``1 <= r <= ν`` with the partner inside the support.
    """
    supp = sorted(set(support))
    nu = nu_of(k, N)
    out: dict[int, list[tuple[int, str, int]]] = {}
    for q in supp:
        opts = []
        for r in range(1, nu + 1):
            t = q + 1 - r * N
            if t in supp:
                opts.append((r, "out", t))
            s = q - 1 + r * N
            if s in supp:
                opts.append((r, "in", s))
        out[q] = opts
    return out


def support_vector(support: Iterable[int], k: int) -> tuple[int, ...]:
    """Betti vector of length ``k+1`` counting each listed degree once per occurrence."""
    beta = [0] * (k + 1)
    for d in support:
        if not 0 <= d <= k:
            raise ValueError(f"support degree {d} outside 0..{k}")
        beta[d] += 1
    return tuple(beta)


def divisibility_set(
    support: Iterable[int], k: int, N_range: Iterable[int], budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Periods ``N`` in range for which the support admits vanishing homology."""
    beta = support_vector(support, k)
    return [N for N in N_range if N >= 2 and vanishing_feasible_pages(beta, N, budget).feasible]


# -- Gysin ------------------------------------------------------------------


@dataclass(frozen=True)
class Constraints:
    """Restrictions on a Betti vector: exact values, lower bounds, duality, entry bound."""

    fix: Mapping[int, int] = field(default_factory=dict)
    at_least: Mapping[int, int] = field(default_factory=dict)
    pd: bool = False
    bound: int = DEFAULT_BOUND

    def admits(self, beta: Sequence[int]) -> bool:
        k = len(beta) - 1
        for i, v in self.fix.items():
            if (beta[i] if 0 <= i <= k else 0) != v:
                return False
        for i, v in self.at_least.items():
            if (beta[i] if 0 <= i <= k else 0) < v:
                return False
        if self.pd and any(beta[i] != beta[k - i] for i in range(k + 1)):
            return False
        return True

    def entry_range(self, i: int, cap: int) -> range:
        if i in self.fix:
            v = self.fix[i]
            return range(v, v + 1) if v <= cap else range(0)
        return range(self.at_least.get(i, 0), cap + 1)


@dataclass(frozen=True)
class GysinSolution:
    """Base Betti numbers and ranks in the Gysin sequence.

    ``cup[i]`` is the rank of ``∪w : H^i(L) -> H^{i+2}(L)``; ``pullback[i]``
    and ``pushforward[i]`` are the ranks of the maps into and out of ``H^i``
    of the total space.
    """

    beta: tuple[int, ...]
    cup: tuple[int, ...]
    pullback: tuple[int, ...]
    pushforward: tuple[int, ...]

    def cup_iso(self, i: int) -> bool:
        k = len(self.beta) - 1
        if not 0 <= i <= k - 2:
            return False
        return self.beta[i] == self.beta[i + 2] == self.cup[i]


def _gysin_chain(gamma: Sequence[int], beta: Sequence[int]) -> list[int]:
    """Dimensions along ``H^i(L) -> H^i(Γ) -> H^{i-1}(L) -> H^{i+1}(L) -> ...`` for ``i = 0..k+1``."""
    k = len(beta) - 1
    seq = []
    for i in range(k + 2):
        seq += [beta[i] if i <= k else 0, gamma[i], beta[i - 1] if i >= 1 else 0]
    return seq


def _gysin_from_profile(gamma: Sequence[int], beta: tuple[int, ...], prof: RankProfile) -> GysinSolution:
    k = len(beta) - 1
    r = prof.ranks
    pull = tuple(r[3 * i] for i in range(k + 2))
    push = tuple(r[3 * i + 1] for i in range(k + 2))
    # the map out of position 3i+2 is ∪w : H^{i-1}(L) -> H^{i+1}(L)
    cup = tuple(r[3 * (j + 1) + 2] for j in range(max(k - 1, 0)))
    return GysinSolution(beta, cup, pull, push)


def gysin_apriori_bound(gamma: Sequence[int], i: int) -> int:
    """``β_i(L) <= Σ_{j <= i, j ≡ i (2)} β_j(Γ)``, from ``β_i = rank π^* + rank(∪w into H^i)``."""
    return sum(gamma[j] for j in range(i % 2, i + 1, 2))


def gysin_solve(
    gamma: Sequence[int],
    k: int,
    w_zero: bool = False,
    constraints: Constraints | None = None,
    cup_iso: Iterable[int] = (),
) -> list[GysinSolution]:
    """All base Betti vectors compatible with the Gysin sequence of a circle bundle.

    The base has dimension ``k`` and the total space ``k+1``.  The search per
    entry runs up to the a-priori bound, so it is complete; ``BoundTooSmall``
    is raised when a solution exceeds ``constraints.bound``.
    """
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != k + 2:
        raise ValueError(f"total space Betti vector must have length {k + 2}")
    cons = constraints or Constraints()
    iso = set(cup_iso)
    caps = [gysin_apriori_bound(gamma, i) for i in range(k + 1)]
    sols: list[GysinSolution] = []
    beta: list[int] = []

    # Exactness determines every rank from a prefix; walk the chain as entries are chosen.
    def rec(i: int, prev_rank: int) -> None:
        if i == k + 1:
            # last triple: (0, γ_{k+1}, β_k)
            r0 = 0 - prev_rank
            if r0 != 0:
                return
            r1 = gamma[k + 1] - r0
            if r1 < 0:
                return
            r2 = beta[k] - r1
            if r2 != 0:
                return
            bt = tuple(beta)
            if not cons.admits(bt):
                return
            seq = _gysin_chain(gamma, bt)
            pinned = {}
            if w_zero:
                pinned = {3 * i + 2: 0 for i in range(k + 2)}
            profs = solve_exact_chain(seq, pinned=pinned)
            for prof in profs:
                sol = _gysin_from_profile(gamma, bt, prof)
                if all(sol.cup_iso(j) for j in iso):
                    sols.append(sol)
            return
        for b in cons.entry_range(i, caps[i]):
            if cons.pd and i > k - i and b != beta[k - i]:
                continue
            # position 3i: H^i(L), incoming rank prev_rank (∪w from H^{i-2})
            r0 = b - prev_rank
            if r0 < 0:
                continue
            r1 = gamma[i] - r0
            if r1 < 0:
                continue
            below = beta[i - 1] if i >= 1 else 0
            r2 = below - r1
            if r2 < 0 or (w_zero and r2 != 0):
                continue
            beta.append(b)
            rec(i + 1, r2)
            beta.pop()

    rec(0, 0)
    sols.sort(key=lambda s: (s.beta, s.cup))
    if any(max(s.beta, default=0) > cons.bound for s in sols):
        raise BoundTooSmall(f"solutions exceed the entry bound {cons.bound}", len(sols))
    return sols


# -- forced Betti vectors ---------------------------------------------------


@dataclass(frozen=True)
class ForcedResult:
    vectors: tuple[tuple[int, ...], ...]
    complete: bool
    label: str
    bound: int


def _enumerate(k: int, N: int, cons: Constraints, bound: int, budget: int) -> list[tuple[int, ...]]:
    nu = nu_of(k, N)
    if nu == 0:
        zero = (0,) * (k + 1)
        return [zero] if cons.admits(zero) else []
    if nu == 1:
        per_chain = []
        for ch in chains(k, N):
            options = []
            ranges = [cons.entry_range(d, bound) for d in ch]
            for vals in itertools.product(*ranges):
                if solve_exact_chain(vals):
                    options.append(vals)
            per_chain.append((ch, options))
        out = []
        for combo in itertools.product(*(opts for _, opts in per_chain)):
            beta = [0] * (k + 1)
            for (ch, _), vals in zip(per_chain, combo):
                for d, v in zip(ch, vals):
                    beta[d] = v
            bt = tuple(beta)
            if cons.admits(bt):
                out.append(bt)
        return sorted(out)
    out = []
    explored = 0
    ranges = [cons.entry_range(i, bound) for i in range(k + 1)]
    for bt in itertools.product(*ranges):
        explored += 1
        if explored > budget:
            raise SearchBudgetExceeded(f"Betti enumeration exceeded {budget} candidates", explored)
        if cons.admits(bt) and vanishing_feasible_pages(bt, N, budget).feasible:
            out.append(bt)
    return sorted(out)


def forced_betti(
    k: int,
    N: int,
    constraints: Constraints | None = None,
    strict: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> ForcedResult:
    """Every Betti vector of length ``k+1`` within the bound that allows vanishing homology.

    Completeness is tested by repeating the search one step above the bound:
    new vectors there mean the family is not captured, which raises
    ``BoundTooSmall`` when ``strict`` and is reported as ``complete=False``
    otherwise.
    """
    cons = constraints or Constraints()
    found = _enumerate(k, N, cons, cons.bound, budget)
    wider = _enumerate(k, N, cons, cons.bound + 1, budget)
    complete = len(wider) == len(found)
    if not complete and strict:
        raise BoundTooSmall(
            f"{len(wider) - len(found)} further vectors appear at bound {cons.bound + 1}", len(wider)
        )
    nu = nu_of(k, N)
    label = "exists" if nu <= 1 else "not excluded"
    return ForcedResult(tuple(found), complete, label, cons.bound)


def padded_witness(beta: Sequence[int], N: int, rng: random.Random, extra: int = 2) -> FloerComplex | None:
    """A feasible ``ν = 1`` witness with acyclic ``∂_0`` summands added and bases scrambled."""
    from .generate import direct_sum, morse_differential, random_conjugate

    res = vanishing_feasible_nu1(beta, N)
    if not res.feasible or res.witness is None:
        return None
    w = res.witness
    k = w.n
    pad_dims = [0] * (k + 1)
    ranks = [0] * k
    for _ in range(extra):
        if k == 0:
            break
        i = rng.randrange(k)
        pad_dims[i] += 1
        pad_dims[i + 1] += 1
        ranks[i] += 1
    pad = FloerComplex(k, N, tuple(pad_dims), {0: morse_differential(pad_dims, ranks)})
    return random_conjugate(direct_sum(w, pad), rng)
