"""Floer-type complexes and their Laurent extensions.

A :class:`FloerComplex` is a Z-graded GF(2) complex ``C^0 .. C^n`` (a Morse
complex) carrying a family of operators ``∂_j : C^i -> C^{i+1-jN}`` for
``0 <= j <= ν``.  Tensoring with Laurent polynomials in ``T`` (``deg T = N``)
turns the Z/N-graded total differential ``∂_0 + ... + ∂_ν`` into an honest
Z-graded differential ``d̃``; :class:`LaurentComplex` materialises that on a
finite window of total degrees.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import NotAComplex, ParseError, RangeError, ShapeMismatch
from .gf2 import BitMatrix, rank

__all__ = [
    "FloerComplex",
    "LaurentComplex",
    "CochainComplex",
    "Violation",
    "nu_of",
    "validate",
    "build_laurent",
    "homology",
    "morse_homology",
    "hf_dims",
    "complex_from_json",
    "complex_to_json",
    "load_complex",
]


def nu_of(n: int, N: int) -> int:
    """Number of higher operators: ``floor((n + 1) / N)``."""
    return (n + 1) // N


@dataclass(frozen=True)
class FloerComplex:
    """Chain groups ``dims[0..n]`` and operators ``ops[j][i] : C^i -> C^{i+1-jN}``.

    ``ops`` may omit any ``j``; a missing operator is zero.  Blocks whose target
    degree falls outside ``[0, n]`` are ``0 x dims[i]`` matrices.
    """

    n: int
    N: int
    dims: tuple[int, ...]
    ops: Mapping[int, tuple[BitMatrix, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ShapeMismatch("top degree must be nonnegative")
        if self.N < 2:
            raise ShapeMismatch(f"period N={self.N} must be at least 2")
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != self.n + 1 or any(d < 0 for d in dims):
            raise ShapeMismatch(f"need {self.n + 1} nonnegative chain dimensions, got {self.dims}")
        object.__setattr__(self, "dims", dims)
        ops = {}
        for j, blocks in dict(self.ops).items():
            j = int(j)
            if j < 0 or j > self.nu:
                raise ShapeMismatch(f"operator index {j} outside 0..{self.nu}", j=j)
            blocks = tuple(blocks)
            if len(blocks) != self.n + 1:
                raise ShapeMismatch(f"operator {j} needs {self.n + 1} blocks", j=j)
            for i, b in enumerate(blocks):
                if b.shape != (self.dim(i + 1 - j * self.N), dims[i]):
                    raise ShapeMismatch(
                        f"block ∂_{j} on degree {i} has shape {b.shape}, "
                        f"expected {(self.dim(i + 1 - j * self.N), dims[i])}",
                        j=j,
                        i=i,
                    )
            ops[j] = blocks
        object.__setattr__(self, "ops", ops)

    @property
    def nu(self) -> int:
        return nu_of(self.n, self.N)

    def dim(self, i: int) -> int:
        return self.dims[i] if 0 <= i <= self.n else 0

    def op(self, j: int, i: int) -> BitMatrix:
        """``∂_j`` restricted to ``C^i`` (zero when absent or out of range)."""
        src = self.dim(i)
        tgt = self.dim(i + 1 - j * self.N)
        blocks = self.ops.get(j)
        if blocks is None or not 0 <= i <= self.n:
            return BitMatrix.zeros(tgt, src)
        return blocks[i]

    def with_ops(self, ops: Mapping[int, Sequence[BitMatrix]]) -> FloerComplex:
        return FloerComplex(self.n, self.N, self.dims, {j: tuple(b) for j, b in ops.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloerComplex):
            return NotImplemented
        if (self.n, self.N, self.dims) != (other.n, other.N, other.dims):
            return False
        return all(
            self.op(j, i) == other.op(j, i) for j in range(self.nu + 1) for i in range(self.n + 1)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.N, self.dims))


@dataclass(frozen=True)
class Violation:
    m: int
    i: int

    def __str__(self) -> str:
        return f"degree-{self.m} identity fails on C^{self.i}"


def validate(c: FloerComplex) -> list[Violation]:
    """Every ``(m, i)`` with ``Σ_{a+b=m} ∂_a ∂_b ≠ 0`` on ``C^i``.

    Individual ``∂_j ∘ ∂_j`` are allowed to be nonzero; only the T-degree
    components of ``d̃ ∘ d̃`` must vanish.
    """
    out = []
    N = c.N
    for m in range(2 * c.nu + 1):
        for i in range(c.n + 1):
            tgt = c.dim(i + 2 - m * N)
            acc = BitMatrix.zeros(tgt, c.dims[i])
            for b in range(max(0, m - c.nu), min(m, c.nu) + 1):
                a = m - b
                acc = acc + c.op(a, i + 1 - b * N) @ c.op(b, i)
            if not acc.is_zero():
                out.append(Violation(m, i))
    return out


def morse_homology(c: FloerComplex) -> tuple[int, ...]:
    """Betti numbers of ``(C, ∂_0)``."""
    if any(not (c.op(0, i + 1) @ c.op(0, i)).is_zero() for i in range(c.n + 1)):
        raise NotAComplex("∂_0 ∘ ∂_0 ≠ 0")
    ranks = [rank(c.op(0, i)) for i in range(c.n + 1)]
    return tuple(c.dims[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(c.n + 1))


@dataclass(frozen=True)
class LaurentComplex:
    """``C̃^l = ⊕_p C^{l-pN} T^p`` on total degrees ``lo..hi``.

    Summands of each ``C̃^l`` are ordered by increasing ``p``; ``offsets[l]``
    maps ``p`` to the first coordinate of its summand.  ``dtilde[l]`` is the
    block matrix ``C̃^l -> C̃^{l+1}`` whose ``(p -> p + j)`` block is ``∂_j``.
    """

    base: FloerComplex
    lo: int
    hi: int
    groups: Mapping[int, tuple[tuple[int, int], ...]]
    offsets: Mapping[int, Mapping[int, int]]
    dtilde: Mapping[int, BitMatrix]

    @property
    def degree_range(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def dim(self, l: int) -> int:
        self._need(l)
        return sum(d for _, d in self.groups[l])

    def summands(self, l: int) -> list[int]:
        self._need(l)
        return [p for p, _ in self.groups[l]]

    def filtration_mask(self, l: int, p: int) -> int:
        """Coordinates of ``F^p C̃^l``: summands with index at least ``p``."""
        self._need(l)
        mask = 0
        for q, d in self.groups[l]:
            if q >= p:
                mask |= ((1 << d) - 1) << self.offsets[l][q]
        return mask

    def d(self, l: int) -> BitMatrix:
        self._need(l)
        self._need(l + 1)
        return self.dtilde[l]

    def tau_shift(self, l: int, x: int) -> int:
        """Multiply the packed vector ``x ∈ C̃^l`` by ``T``, landing in ``C̃^{l+N}``."""
        self._need(l)
        self._need(l + self.base.N)
        y = 0
        for p, d in self.groups[l]:
            chunk = (x >> self.offsets[l][p]) & ((1 << d) - 1)
            y |= chunk << self.offsets[l + self.base.N][p + 1]
        return y

    def _need(self, l: int) -> None:
        if not self.lo <= l <= self.hi:
            raise RangeError(f"degree {l} outside materialised range [{self.lo}, {self.hi}]")


def default_range(c: FloerComplex) -> tuple[int, int]:
    pad = (c.nu + 2) * c.N
    return (-pad, c.n + pad)


def build_laurent(c: FloerComplex, l_lo: int | None = None, l_hi: int | None = None) -> LaurentComplex:
    if l_lo is None or l_hi is None:
        d_lo, d_hi = default_range(c)
        l_lo = d_lo if l_lo is None else l_lo
        l_hi = d_hi if l_hi is None else l_hi
    if l_lo > l_hi:
        raise RangeError(f"empty degree range [{l_lo}, {l_hi}]")
    N, n = c.N, c.n
    groups: dict[int, tuple[tuple[int, int], ...]] = {}
    offsets: dict[int, dict[int, int]] = {}
    for l in range(l_lo, l_hi + 1):
        # 0 <= l - pN <= n
        p_min = -((n - l) // N)
        p_max = l // N
        summ = tuple((p, c.dims[l - p * N]) for p in range(p_min, p_max + 1))
        groups[l] = summ
        off, acc = {}, 0
        for p, d in summ:
            off[p] = acc
            acc += d
        offsets[l] = off
    dtilde: dict[int, BitMatrix] = {}
    for l in range(l_lo, l_hi):
        src_total = sum(d for _, d in groups[l])
        tgt_total = sum(d for _, d in groups[l + 1])
        rows = [0] * tgt_total
        for p, dsrc in groups[l]:
            i = l - p * N
            so = offsets[l][p]
            for j in range(c.nu + 1):
                blk = c.op(j, i)
                if blk.rows == 0 or dsrc == 0:
                    continue
                to = offsets[l + 1][p + j]
                for r, bits in enumerate(blk.bits):
                    rows[to + r] |= bits << so
        dtilde[l] = BitMatrix(tgt_total, src_total, tuple(rows))
    return LaurentComplex(c, l_lo, l_hi, groups, offsets, dtilde)


def homology(lc: LaurentComplex, l: int) -> int:
    """``dim H^l(C̃, d̃)``, i.e. the Floer homology in degree ``l mod N``."""
    for k in (l - 1, l, l + 1):
        if not lc.lo <= k <= lc.hi:
            raise RangeError(f"homology at {l} needs degrees {l - 1}..{l + 1} materialised")
    return lc.dim(l) - rank(lc.d(l)) - rank(lc.d(l - 1))


def hf_dims(c: FloerComplex, lc: LaurentComplex | None = None) -> tuple[int, ...]:
    """``HF^{i mod N}`` for ``i = 0..N-1``."""
    if lc is None:
        lc = build_laurent(c)
    return tuple(homology(lc, l) for l in range(c.N))


@dataclass(frozen=True)
class CochainComplex:
    """A bounded complex ``D^lo .. D^{lo+len(dims)-1}`` with one differential.

    ``diffs[k]`` maps ``D^{lo+k} -> D^{lo+k+1}``; the last one is ``0 x dim``.
    """

    lo: int
    dims: tuple[int, ...]
    diffs: tuple[BitMatrix, ...]

    def __post_init__(self) -> None:
        dims = tuple(self.dims)
        object.__setattr__(self, "dims", dims)
        if len(self.diffs) != len(dims):
            raise ShapeMismatch("one differential per degree expected")
        for k, m in enumerate(self.diffs):
            tgt = dims[k + 1] if k + 1 < len(dims) else 0
            if m.shape != (tgt, dims[k]):
                raise ShapeMismatch(f"differential out of degree {self.lo + k} has shape {m.shape}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.dims) - 1

    def dim(self, i: int) -> int:
        k = i - self.lo
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def diff(self, i: int) -> BitMatrix:
        k = i - self.lo
        if 0 <= k < len(self.dims):
            return self.diffs[k]
        return BitMatrix.zeros(self.dim(i + 1), 0)

    def boundary_rank(self, i: int) -> int:
        """``dim ∂(D^i)``."""
        return rank(self.diff(i))

    def check(self) -> None:
        for i in range(self.lo, self.hi):
            if not (self.diff(i + 1) @ self.diff(i)).is_zero():
                raise NotAComplex(f"∂∘∂ ≠ 0 on D^{i}")

    def homology_dim(self, i: int) -> int:
        return self.dim(i) - self.boundary_rank(i) - self.boundary_rank(i - 1)


# -- JSON ------------------------------------------------------------------


def complex_to_json(c: FloerComplex) -> dict[str, Any]:
    ops = {}
    for j in sorted(c.ops):
        ops[str(j)] = [c.op(j, i).to_strings() for i in range(c.n + 1)]
    return {"n": c.n, "N": c.N, "dims": list(c.dims), "ops": ops}


def complex_from_json(data: Mapping[str, Any]) -> FloerComplex:
    try:
        n, N, dims = int(data["n"]), int(data["N"]), [int(d) for d in data["dims"]]
        raw_ops = data.get("ops", {}) or {}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed complex: {exc}") from exc
    if len(dims) != n + 1:
        raise ParseError(f"dims has {len(dims)} entries, expected n+1 = {n + 1}")
    if N < 2:
        raise ParseError(f"N={N} must be at least 2")
    ops = {}
    for key, blocks in raw_ops.items():
        try:
            j = int(key)
        except ValueError as exc:
            raise ParseError(f"operator key {key!r} is not an integer") from exc
        if not isinstance(blocks, list) or len(blocks) != n + 1:
            raise ParseError(f"operator {j} needs a list of {n + 1} blocks")
        mats = []
        for i, rows in enumerate(blocks):
            if not isinstance(rows, list):
                raise ParseError(f"block ({j},{i}) is not a list of row strings")
            mats.append(BitMatrix.from_strings(rows, cols=dims[i]))
        ops[j] = tuple(mats)
    try:
        return FloerComplex(n, N, tuple(dims), ops)
    except ShapeMismatch as exc:
        raise ParseError(str(exc)) from exc


def load_complex(path: str) -> FloerComplex:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return complex_from_json(data)
