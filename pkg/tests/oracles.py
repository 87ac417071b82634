"""Reference computations that share no code with the package.

Everything here works on plain lists of 0/1 integers and rebuilds the
objects it needs from scratch, so agreement with the package is evidence
rather than tautology.  Speed is not a goal.
"""

from __future__ import annotations

import itertools
from typing import Sequence

Matrix = list[list[int]]


def rank_lists(rows: Matrix) -> int:
    """GF(2) rank by textbook row reduction on a copy."""
    m = [list(r) for r in rows if r]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][col]:
                m[i] = [a ^ b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def matmul_lists(a: Matrix, b: Matrix, inner: int, cols: int) -> Matrix:
    return [[sum(a[i][k] & b[k][j] for k in range(inner)) & 1 for j in range(cols)] for i in range(len(a))]


def _offsets(dims: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for d in dims:
        out.append(acc)
        acc += d
    return out


def total_matrix(c) -> Matrix:
    """``Σ_j ∂_j`` assembled on ``⊕_i C^i`` from the entries of each block."""
    dims = list(c.dims)
    off = _offsets(dims)
    size = sum(dims)
    big = [[0] * size for _ in range(size)]
    for j in range(c.nu + 1):
        for i in range(c.n + 1):
            t = i + 1 - j * c.N
            if not 0 <= t <= c.n:
                continue
            block = c.op(j, i)
            for a in range(dims[t]):
                for b in range(dims[i]):
                    if block[a, b]:
                        big[off[t] + a][off[i] + b] ^= 1
    return big


def floer_homology_dims(c) -> list[int]:
    """Homology of the total operator on the Z/N-graded space, degree by degree mod N."""
    dims = list(c.dims)
    off = _offsets(dims)
    big = total_matrix(c)
    size = len(big)
    if size:
        sq = matmul_lists(big, big, size, size)
        assert not any(any(r) for r in sq), "total operator does not square to zero"
    idx = {l: [off[i] + a for i in range(c.n + 1) if i % c.N == l for a in range(dims[i])] for l in range(c.N)}

    def piece(l: int) -> Matrix:
        src, tgt = idx[l % c.N], idx[(l + 1) % c.N]
        return [[big[r][s] for s in src] for r in tgt] if tgt else []

    ranks = {l: rank_lists(piece(l)) if idx[l] else 0 for l in range(c.N)}
    return [len(idx[l]) - ranks[l] - ranks[(l - 1) % c.N] for l in range(c.N)]


def cochain_homology_dims(dims: Sequence[int], diffs: Sequence[Matrix]) -> list[int]:
    ranks = [rank_lists(d) if d and dims[k] else 0 for k, d in enumerate(diffs)]
    return [dims[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(len(dims))]


# -- brute-force witnesses with ∂_0 = 0 and one higher operator --------------


def _rank_bits(rows: list[int]) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def brute_nu1_witness(beta: Sequence[int], N: int) -> tuple[list[tuple[int, int, int, int]], int] | None:
    """Search all ``∂_1`` with ``∂_0 = 0`` on ``C = ⊕ Z₂^{β_i}`` for vanishing homology.

    With ``∂_0 = 0`` the Morse cohomology is ``β`` itself, the only structure
    equation left is ``∂_1 ∘ ∂_1 = 0``, and the total homology vanishes iff
    ``dim C = 2 rank ∂_1``.  Any filtered complex is filtered-homotopic to one
    with ``∂_0 = 0`` on its cohomology, so the search is exhaustive.

    Returns the list of nonzero entries ``(target_deg, row, source_deg, col)``
    and the mask index, or ``None`` when no assignment works.
    """
    k = len(beta) - 1
    total = sum(beta)
    if total % 2:
        return None
    off = _offsets(beta)
    slots = []
    for i in range(k + 1):
        t = i + 1 - N
        if 0 <= t <= k:
            for a in range(beta[t]):
                for b in range(beta[i]):
                    slots.append((t, a, i, b))
    if total == 0:
        return [], 0
    half = total // 2
    if len(slots) < half:
        return None
    for mask in range(1 << len(slots)):
        if bin(mask).count("1") < half:
            continue
        # column-major: the image of basis vector g is cols[g]
        cols = [0] * total
        for s, (t, a, i, b) in enumerate(slots):
            if mask >> s & 1:
                cols[off[i] + b] |= 1 << (off[t] + a)
        if _rank_bits(cols) != half:
            continue
        # ∂∂ = 0: the image of each column is killed
        ok = True
        for v in cols:
            img = 0
            g = 0
            while v:
                if v & 1:
                    img ^= cols[g]
                v >>= 1
                g += 1
            if img:
                ok = False
                break
        if ok:
            entries = [slots[s] for s in range(len(slots)) if mask >> s & 1]
            return entries, mask
    return None


def witness_to_complex(beta: Sequence[int], N: int, entries):
    """Package a brute-force witness as a package complex (for round-tripping only)."""
    from floerss import BitMatrix, FloerComplex

    k = len(beta) - 1
    blocks = []
    for i in range(k + 1):
        t = i + 1 - N
        tgt = beta[t] if 0 <= t <= k else 0
        rows = [[0] * beta[i] for _ in range(tgt)]
        for tt, a, ii, b in entries:
            if ii == i:
                rows[a][b] = 1
        blocks.append(BitMatrix.from_lists(rows, cols=beta[i]))
    zero = [BitMatrix.zeros(beta[i + 1] if i < k else 0, beta[i]) for i in range(k + 1)]
    return FloerComplex(k, N, tuple(beta), {0: zero, 1: blocks})


def nu1_cases(k_max: int = 6, entry_max: int = 2):
    """Every ``(β, N)`` with ``1 <= k <= k_max``, entries ``<= entry_max`` and ``ν = 1``."""
    for k in range(1, k_max + 1):
        for N in range(2, k + 2):
            if (k + 1) // N != 1:
                continue
            for beta in itertools.product(range(entry_max + 1), repeat=k + 1):
                yield beta, N
