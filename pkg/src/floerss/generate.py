"""Seeded construction of valid Floer-type complexes.

The Morse differential is assembled from elementary acyclic pairs and then
conjugated by random invertible matrices.  Each higher operator ``∂_m`` is then
drawn from the affine space of solutions of the identities in which it appears
linearly, so no rejection sampling on ``d̃ ∘ d̃ = 0`` is needed except for the
single quadratic identity ``∂_1 ∘ ∂_1 = 0`` when ``ν = 1``.

All randomness flows through :class:`random.Random` (Mersenne Twister), so a
seed fixes the output bit for bit.
"""

from __future__ import annotations

import random
from typing import Mapping, Sequence

from .complex import FloerComplex, nu_of, validate
from .gf2 import BitMatrix, Echelon, inverse

__all__ = [
    "morse_differential",
    "conjugate",
    "direct_sum",
    "random_complex",
    "random_cochain",
]

_QUADRATIC_TRIES = 100


def morse_differential(dims: Sequence[int], ranks: Sequence[int]) -> list[BitMatrix]:
    """Normal-form ``∂_0`` with ``rank(∂_0 : C^i -> C^{i+1}) = ranks[i]``.

    In degree ``i`` the first ``ranks[i-1]`` coordinates are boundaries, the next
    ``ranks[i]`` map onto the boundary coordinates of degree ``i+1``.
    """
    n = len(dims) - 1
    blocks = []
    for i in range(n + 1):
        below = ranks[i - 1] if i > 0 else 0
        r = ranks[i] if i < n else 0
        if below + r > dims[i] or (i < n and r > dims[i + 1]):
            raise ValueError(f"ranks {ranks} do not fit dims {dims}")
        tgt = dims[i + 1] if i < n else 0
        rows = [0] * tgt
        for k in range(r):
            rows[k] = 1 << (below + k)
        blocks.append(BitMatrix(tgt, dims[i], tuple(rows)))
    return blocks


def conjugate(c: FloerComplex, mats: Sequence[BitMatrix]) -> FloerComplex:
    """Change basis in every degree: ``∂_j ↦ P_t ∂_j P_i^{-1}``."""
    inv = [inverse(m) for m in mats]
    ops = {}
    for j in c.ops:
        blocks = []
        for i in range(c.n + 1):
            t = i + 1 - j * c.N
            b = c.op(j, i)
            if 0 <= t <= c.n:
                b = mats[t] @ b @ inv[i]
            blocks.append(b)
        ops[j] = blocks
    return c.with_ops(ops)


def _block_diag(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    top = a.hstack(BitMatrix.zeros(a.rows, b.cols))
    bottom = BitMatrix.zeros(b.rows, a.cols).hstack(b)
    return top.vstack(bottom)


def direct_sum(a: FloerComplex, b: FloerComplex) -> FloerComplex:
    if (a.n, a.N) != (b.n, b.N):
        raise ValueError("direct sum needs equal n and N")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    ops = {}
    for j in set(a.ops) | set(b.ops):
        ops[j] = [_block_diag(a.op(j, i), b.op(j, i)) for i in range(a.n + 1)]
    return FloerComplex(a.n, a.N, dims, ops)


def random_conjugate(c: FloerComplex, rng: random.Random) -> FloerComplex:
    return conjugate(c, [BitMatrix.random_invertible(d, rng) for d in c.dims])


def _random_ranks(dims: Sequence[int], rng: random.Random) -> list[int]:
    ranks = []
    below = 0
    for i in range(len(dims) - 1):
        hi = min(dims[i] - below, dims[i + 1])
        r = rng.randint(0, hi) if hi > 0 else 0
        ranks.append(r)
        below = r
    return ranks


class _Unknown:
    """Variables are the entries of ``∂_m^{(i)}`` for every source degree ``i``."""

    def __init__(self, c: FloerComplex, m: int):
        self.c, self.m = c, m
        self.var_base: dict[int, int] = {}
        total = 0
        for i in range(c.n + 1):
            self.var_base[i] = total
            total += c.dim(i + 1 - m * c.N) * c.dims[i]
        self.count = total

    def decode(self, x: int) -> list[BitMatrix]:
        c, m = self.c, self.m
        blocks = []
        for i in range(c.n + 1):
            rows, cols = c.dim(i + 1 - m * c.N), c.dims[i]
            base = self.var_base[i]
            packed = []
            for a in range(rows):
                packed.append((x >> (base + a * cols)) & ((1 << cols) - 1))
            blocks.append(BitMatrix(rows, cols, tuple(packed)))
        return blocks


def _solve_level(
    c: FloerComplex, ops: dict[int, list[BitMatrix]], m: int, levels: Sequence[int], rng: random.Random
) -> list[BitMatrix] | None:
    """Random ``∂_m`` satisfying the identities at ``levels`` (linear in ``∂_m``)."""
    N, n = c.N, c.n
    unk = _Unknown(c, m)

    def op(j: int, i: int) -> BitMatrix:
        if j == m or j not in ops or not 0 <= i <= n:
            return BitMatrix.zeros(c.dim(i + 1 - j * N), c.dim(i))
        return ops[j][i]

    # equation index: (level, source degree s, row, col) of the block C^s -> C^{s+2-level*N}
    eq_base: dict[tuple[int, int], int] = {}
    total = 0
    for M in levels:
        for s in range(n + 1):
            eq_base[(M, s)] = total
            total += c.dim(s + 2 - M * N) * c.dims[s]

    def eq_index(M: int, s: int, row: int, col: int) -> int:
        return eq_base[(M, s)] + row * c.dims[s] + col

    # constant term: the identity evaluated with ∂_m = 0
    const = 0
    for M in levels:
        for s in range(n + 1):
            acc = BitMatrix.zeros(c.dim(s + 2 - M * N), c.dims[s])
            for b in range(0, M + 1):
                a = M - b
                if a == m or b == m:
                    continue
                acc = acc + op(a, s + 1 - b * N) @ op(b, s)
            for row, bits in enumerate(acc.bits):
                const |= bits << eq_index(M, s, row, 0)

    columns = [0] * unk.count
    for i in range(n + 1):
        t = i + 1 - m * N
        rows, cols = c.dim(t), c.dims[i]
        for a in range(rows):
            for b in range(cols):
                v = unk.var_base[i] + a * cols + b
                vec = 0
                for M in levels:
                    partner = M - m
                    if partner == m or partner < 0:
                        continue
                    # ∂_partner^{(t)} E_ab : column b gets column a of ∂_partner^{(t)}
                    left = op(partner, t)
                    for rho in range(left.rows):
                        if (left.bits[rho] >> a) & 1:
                            vec ^= 1 << eq_index(M, i, rho, b)
                    # E_ab ∂_partner^{(s)} with s + 1 - partner*N = i : row a gets row b
                    s = i - 1 + partner * N
                    if 0 <= s <= n:
                        right = op(partner, s)
                        row_bits = right.bits[b]
                        kappa = 0
                        while row_bits:
                            if row_bits & 1:
                                vec ^= 1 << eq_index(M, s, a, kappa)
                            row_bits >>= 1
                            kappa += 1
                columns[v] = vec

    ech = Echelon()
    kernel = []
    for v, col in enumerate(columns):
        residue, tag = ech.add(col, 1 << v)
        if residue == 0:
            kernel.append(tag)
    residue, particular = ech.reduce(const)
    if residue:
        return None
    x = particular
    for k in kernel:
        if rng.getrandbits(1):
            x ^= k
    return unk.decode(x)


def random_complex(
    rng: random.Random,
    n: int,
    N: int,
    max_dim: int = 4,
    dims: Sequence[int] | None = None,
    higher: bool = True,
) -> FloerComplex:
    """A random complex passing :func:`validate`.

    ``higher=False`` leaves every ``∂_j`` with ``j ≥ 1`` at zero.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    if dims is None:
        dims = [rng.randint(0, max_dim) for _ in range(n + 1)]
    dims = list(dims)
    nu = nu_of(n, N)
    base = FloerComplex(n, N, tuple(dims), {0: morse_differential(dims, _random_ranks(dims, rng))})
    base = random_conjugate(base, rng)
    if not higher or nu == 0:
        return base
    ops: dict[int, list[BitMatrix]] = {0: list(base.ops[0])}
    for m in range(1, nu + 1):
        levels = [m]
        if m == nu and nu >= 2:
            levels.append(nu + 1)
        tries = _QUADRATIC_TRIES if (m == nu == 1) else 1
        chosen = None
        for _ in range(tries):
            blocks = _solve_level(base, ops, m, levels, rng)
            if blocks is None:
                break
            trial = dict(ops)
            trial[m] = blocks
            cand = FloerComplex(n, N, tuple(dims), trial)
            if m < nu or not validate(cand):
                chosen = blocks
                break
        if chosen is None:
            return base
        ops[m] = chosen
    result = FloerComplex(n, N, tuple(dims), ops)
    if validate(result):
        return base
    return result


def random_cochain(rng: random.Random, length: int, max_dim: int = 5, lo: int = 0):
    """A random single-differential complex in degrees ``lo .. lo+length-1``."""
    from .complex import CochainComplex

    dims = [rng.randint(0, max_dim) for _ in range(length)]
    ranks = _random_ranks(dims, rng)
    blocks = morse_differential(dims, ranks)
    mats = [BitMatrix.random_invertible(d, rng) for d in dims]
    inv = [inverse(m) for m in mats]
    diffs = []
    for k, b in enumerate(blocks):
        if k + 1 < len(dims):
            b = mats[k + 1] @ b @ inv[k]
        diffs.append(b)
    return CochainComplex(lo, tuple(dims), tuple(diffs))
