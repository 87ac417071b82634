"""Dense linear algebra over GF(2).

Rows of a :class:`BitMatrix` are packed into Python integers: bit ``j`` of
``bits[i]`` is the entry in row ``i``, column ``j``.  Column vectors use the
same packing with bit ``i`` standing for coordinate ``i``.  Every other module
does its arithmetic through this one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError

__all__ = [
    "BitMatrix",
    "Echelon",
    "rank",
    "kernel_basis",
    "image_basis",
    "quotient_dim",
    "solve",
    "inverse",
    "span_rank",
    "vec_from_bits",
    "vec_to_bits",
]


def vec_from_bits(bits: Sequence[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a bit")
        if b:
            v |= 1 << i
    return v


def vec_to_bits(v: int, length: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(length))


class Echelon:
    """Incremental basis of a subspace, keyed by leading (highest) bit.

    Each stored vector optionally carries a ``tag``: an integer recording which
    inserted generators it is a combination of.  Tags are what let callers
    recover kernels and solve systems from the same elimination pass.
    """

    __slots__ = ("_piv",)

    def __init__(self) -> None:
        self._piv: dict[int, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self._piv)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        piv = self._piv
        while v:
            hit = piv.get(v.bit_length() - 1)
            if hit is None:
                break
            v ^= hit[0]
            tag ^= hit[1]
        return v, tag

    def add(self, v: int, tag: int = 0) -> tuple[int, int]:
        """Insert ``v``; return the reduced residue and its tag.

        A zero residue means ``v`` was already in the span, and the returned
        tag then spells out the dependency.
        """
        v, tag = self.reduce(v, tag)
        if v:
            self._piv[v.bit_length() - 1] = (v, tag)
        return v, tag

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0


def span_rank(vectors: Iterable[int]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be nonnegative")
        if len(self.bits) != self.rows:
            raise DimensionMismatch(f"expected {self.rows} packed rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for r in self.bits:
            if r < 0 or r >= limit:
                raise DimensionMismatch(f"row {r:b} does not fit in {self.cols} columns")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
        if cols is None:
            cols = len(entries[0]) if entries else 0
        packed = []
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows")
            packed.append(vec_from_bits(row))
        return cls(len(entries), cols, tuple(packed))

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: int | None = None) -> BitMatrix:
        """Parse the JSON literal form: one string over ``{"0","1"}`` per row."""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        packed = []
        for s in rows:
            if not isinstance(s, str) or len(s) != cols or set(s) - {"0", "1"}:
                raise ParseError(f"bad matrix row {s!r} (expected {cols} chars over 0/1)")
            packed.append(int(s[::-1], 2) if s else 0)
        return cls(len(rows), cols, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> BitMatrix:
        packed = [0] * rows
        for j, c in enumerate(columns):
            i = 0
            while c:
                if c & 1:
                    if i >= rows:
                        raise DimensionMismatch("column longer than row count")
                    packed[i] |= 1 << j
                c >>= 1
                i += 1
        return cls(rows, len(columns), tuple(packed))

    @classmethod
    def random(cls, rows: int, cols: int, rng: random.Random) -> BitMatrix:
        return cls(rows, cols, tuple(rng.getrandbits(cols) if cols else 0 for _ in range(rows)))

    @classmethod
    def random_invertible(cls, n: int, rng: random.Random) -> BitMatrix:
        while True:
            m = cls.random(n, n, rng)
            if rank(m) == n:
                return m

    # -- views ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.bits[i] >> j) & 1

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.bits]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.bits]

    def columns(self) -> list[int]:
        out = [0] * self.cols
        for i, r in enumerate(self.bits):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return out

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, {self.to_strings()})"

    # -- arithmetic -------------------------------------------------------

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.cols, self.rows, tuple(self.columns()))

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    __sub__ = __add__

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.shape} @ {other.shape}")
        ob = other.bits
        out = []
        for r in self.bits:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= ob[k]
                r >>= 1
                k += 1
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def apply(self, x: int) -> int:
        """Image of the packed column vector ``x``."""
        y = 0
        for i, r in enumerate(self.bits):
            if (r & x).bit_count() & 1:
                y |= 1 << i
        return y

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.rows != other.rows:
            raise DimensionMismatch("hstack needs equal row counts")
        s = self.cols
        return BitMatrix(self.rows, s + other.cols, tuple(a | (b << s) for a, b in zip(self.bits, other.bits)))

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise DimensionMismatch("vstack needs equal column counts")
        return BitMatrix(self.rows + other.rows, self.cols, self.bits + other.bits)

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> BitMatrix:
        """Return ``P_r M P_c``: row ``i`` of the result is row ``row_perm[i]``, likewise for columns."""
        rows = [self.bits[k] for k in row_perm]
        out = []
        for r in rows:
            acc = 0
            for new_j, old_j in enumerate(col_perm):
                if (r >> old_j) & 1:
                    acc |= 1 << new_j
            out.append(acc)
        return BitMatrix(self.rows, self.cols, tuple(out))


def rank(m: BitMatrix) -> int:
    return span_rank(m.bits)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Columns of the result form a basis of ``ker m``, chosen by column elimination order."""
    ech = Echelon()
    kernel = []
    for j, c in enumerate(m.columns()):
        residue, tag = ech.add(c, 1 << j)
        if residue == 0:
            kernel.append(tag)
    return BitMatrix.from_columns(kernel, m.cols)


def image_basis(m: BitMatrix) -> BitMatrix:
    """The leftmost maximal independent set of columns of ``m``."""
    ech = Echelon()
    keep = [c for c in m.columns() if ech.add(c)[0]]
    return BitMatrix.from_columns(keep, m.rows)


def quotient_dim(big: BitMatrix, small: BitMatrix) -> int:
    """``dim (span(big) + span(small)) / span(small)`` for column spans in a common ambient space."""
    if big.rows != small.rows:
        raise DimensionMismatch(f"ambient dimensions differ: {big.rows} vs {small.rows}")
    ech = Echelon()
    for c in small.columns():
        ech.add(c)
    base = len(ech)
    for c in big.columns():
        ech.add(c)
    return len(ech) - base


def solve(m: BitMatrix, b: Sequence[int] | int) -> tuple[int, ...] | None:
    """Some ``x`` with ``m x = b``, or ``None`` when ``b`` is outside the image."""
    if isinstance(b, int):
        target = b
        if target >> m.rows:
            raise DimensionMismatch("right-hand side longer than row count")
    else:
        if len(b) != m.rows:
            raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {m.rows}")
        target = vec_from_bits(b)
    ech = Echelon()
    for j, c in enumerate(m.columns()):
        ech.add(c, 1 << j)
    residue, tag = ech.reduce(target)
    if residue:
        return None
    return vec_to_bits(tag, m.cols)


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix; raises DimensionMismatch otherwise."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices are invertible")
    cols = []
    for i in range(m.rows):
        x = solve(m, 1 << i)
        if x is None:
            raise DimensionMismatch("matrix is singular")
        cols.append(vec_from_bits(x))
    return BitMatrix.from_columns(cols, m.rows)
