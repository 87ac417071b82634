"""Spectral sequence of the filtration ``F^p C̃ = ⊕_{p' ≥ p} C^{l-p'N} T^{p'}``.

Pages are computed directly from the cycle/boundary subspaces

    Z_r(p, l) = { x ∈ F^p C̃^l : d̃x ∈ F^{p+r} C̃^{l+1} }
    B_r(p, l) = d̃ Z_r(p - r, l - 1)
    E_r(p, q) = Z_r(p, l) / (Z_{r-1}(p+1, l) + B_{r-1}(p, l)),   l = p + q

and the page differential is what ``d̃`` induces on chosen coset
representatives.  :func:`turn` takes homology of a page instead; agreement of
the two routes is checked, not assumed.

Cells are keyed ``(p, q)``.  The Morse degree of a cell is ``i = p + q - pN``
and the page differential sends ``i`` to ``i + 1 - rN``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .complex import FloerComplex, LaurentComplex, build_laurent, homology, morse_homology, validate
from .errors import FloerSSError, RangeError, WindowTooSmall
from .gf2 import BitMatrix, Echelon, rank

__all__ = [
    "Page",
    "page",
    "turn",
    "e_infinity",
    "check_statement5",
    "band_window",
    "diagonal_window",
    "CellComputer",
    "pages_up_to",
    "laurent_for_pages",
    "theorem_checks",
]

Cell = tuple[int, int]


@dataclass(frozen=True)
class Page:
    r: int
    n: int
    N: int
    window: frozenset[Cell]
    cells: Mapping[Cell, int]
    diff: Mapping[Cell, BitMatrix]
    reps: Mapping[Cell, tuple[int, ...]] = field(default_factory=dict, repr=False)
    lc: LaurentComplex | None = field(default=None, repr=False, compare=False)

    def dim(self, p: int, q: int) -> int:
        return self.cells[(p, q)]

    def target(self, cell: Cell) -> Cell:
        p, q = cell
        return (p + self.r, q - self.r + 1)

    def source(self, cell: Cell) -> Cell:
        p, q = cell
        return (p - self.r, q + self.r - 1)

    def is_zero(self) -> bool:
        return not any(self.cells.values())

    def differentials_vanish(self) -> bool:
        return all(m.is_zero() for m in self.diff.values())

    def total(self, l: int) -> int:
        """``Σ_{p+q=l}`` over the window."""
        return sum(d for (p, q), d in self.cells.items() if p + q == l)

    def cell_list(self) -> list[tuple[int, int, int]]:
        return [(p, q, self.cells[(p, q)]) for p, q in sorted(self.window)]


def band_window(n: int, N: int, p_range: tuple[int, int], i_range: tuple[int, int] | None = None) -> frozenset[Cell]:
    """Cells with ``p`` in ``p_range`` and Morse degree ``p + q - pN`` in ``i_range``.

    The default degree range ``[-1, n+1]`` keeps one structurally empty row on
    either side of the support.
    """
    i_lo, i_hi = i_range if i_range is not None else (-1, n + 1)
    return frozenset(
        (p, i + p * N - p) for p in range(p_range[0], p_range[1] + 1) for i in range(i_lo, i_hi + 1)
    )


def diagonal_window(n: int, N: int, degrees: Iterable[int], margin: int = 1) -> frozenset[Cell]:
    """All cells on the diagonals ``p + q = l`` whose Morse degree lies in ``[-margin, n+margin]``."""
    out = set()
    for l in degrees:
        # l - pN ∈ [-margin, n + margin]
        p_lo = -((n + margin - l) // N)
        p_hi = (l + margin) // N
        for p in range(p_lo, p_hi + 1):
            out.add((p, l - p))
    return frozenset(out)


@dataclass
class _CellData:
    dim: int
    reps: tuple[int, ...]
    ech: Echelon


class CellComputer:
    """Memoised subspace arithmetic inside a materialised Laurent complex.

    ``shuffle`` permutes the spanning vectors of each numerator before the
    greedy representative choice; it exists to test basis independence.
    """

    def __init__(self, lc: LaurentComplex, shuffle: random.Random | None = None):
        self.lc = lc
        self.shuffle = shuffle
        self._cols: dict[int, list[int]] = {}
        self._z: dict[tuple[int, int, int], tuple[int, ...]] = {}
        self._cells: dict[tuple[int, int, int], _CellData] = {}

    def columns(self, l: int) -> list[int]:
        cols = self._cols.get(l)
        if cols is None:
            cols = self.lc.d(l).columns()
            self._cols[l] = cols
        return cols

    def apply(self, l: int, x: int) -> int:
        cols = self.columns(l)
        y = 0
        k = 0
        while x:
            if x & 1:
                y ^= cols[k]
            x >>= 1
            k += 1
        return y

    def z(self, r: int, p: int, l: int) -> tuple[int, ...]:
        key = (r, p, l)
        hit = self._z.get(key)
        if hit is not None:
            return hit
        fmask = self.lc.filtration_mask(l, p)
        coords = [k for k in range(fmask.bit_length()) if (fmask >> k) & 1]
        if r <= 0:
            basis = tuple(1 << k for k in coords)
        else:
            cols = self.columns(l)
            total = self.lc.dim(l + 1)
            low = ((1 << total) - 1) & ~self.lc.filtration_mask(l + 1, p + r)
            ech = Echelon()
            kernel = []
            for k in coords:
                residue, tag = ech.add(cols[k] & low, 1 << k)
                if residue == 0:
                    kernel.append(tag)
            basis = tuple(kernel)
        self._z[key] = basis
        return basis

    def b(self, r: int, p: int, l: int) -> tuple[int, ...]:
        return tuple(self.apply(l - 1, x) for x in self.z(r, p - r, l - 1))

    def cell(self, r: int, p: int, l: int) -> _CellData:
        key = (r, p, l)
        hit = self._cells.get(key)
        if hit is not None:
            return hit
        ech = Echelon()
        for v in self.z(r - 1, p + 1, l):
            ech.add(v)
        for v in self.b(r - 1, p, l):
            ech.add(v)
        numer = list(self.z(r, p, l))
        if self.shuffle is not None:
            self.shuffle.shuffle(numer)
            numer = _mix(numer, self.shuffle)
        reps = []
        for x in numer:
            if ech.reduce(x)[0]:
                ech.add(x, 1 << len(reps))
                reps.append(x)
        data = _CellData(len(reps), tuple(reps), ech)
        self._cells[key] = data
        return data

    def delta(self, r: int, p: int, l: int) -> BitMatrix:
        """Matrix of the page-``r`` differential out of cell ``(p, l - p)``."""
        src = self.cell(r, p, l)
        tgt = self.cell(r, p + r, l + 1)
        cols = []
        for x in src.reps:
            residue, tag = tgt.ech.reduce(self.apply(l, x))
            if residue:
                raise FloerSSError(f"image of a page-{r} cycle left Z_{r}; complex is inconsistent")
            cols.append(tag)
        return BitMatrix.from_columns(cols, tgt.dim)


def _mix(vectors: list[int], rng: random.Random) -> list[int]:
    """Replace the spanning list by a random invertible recombination of itself."""
    out = list(vectors)
    for i in range(len(out)):
        for j in range(len(out)):
            if i != j and rng.getrandbits(1):
                out[i] ^= out[j]
    ech = Echelon()
    if sum(1 for v in out if ech.add(v)[0]) != sum(1 for _ in vectors):
        return vectors
    return out


def _check_range(lc: LaurentComplex, window: Iterable[Cell], r: int) -> None:
    for p, q in window:
        l = p + q
        if l - 1 < lc.lo or l + 2 > lc.hi:
            raise RangeError(
                f"cell {(p, q)} at page {r} needs degrees {l - 1}..{l + 2}, "
                f"materialised range is [{lc.lo}, {lc.hi}]"
            )


def page(
    lc: LaurentComplex,
    r: int,
    window: Iterable[Cell] | None = None,
    shuffle: random.Random | None = None,
    computer: CellComputer | None = None,
) -> Page:
    """Page ``r`` on ``window``, computed from the cycle and boundary subspaces."""
    if r < 0:
        raise ValueError("page index must be nonnegative")
    c = lc.base
    if window is None:
        window = diagonal_window(c.n, c.N, range(c.N))
    window = frozenset(window)
    _check_range(lc, window, r)
    comp = computer if computer is not None else CellComputer(lc, shuffle)
    cells, diff, reps = {}, {}, {}
    for p, q in sorted(window):
        data = comp.cell(r, p, p + q)
        cells[(p, q)] = data.dim
        reps[(p, q)] = data.reps
        diff[(p, q)] = comp.delta(r, p, p + q)
    return Page(r, c.n, c.N, window, cells, diff, reps, lc)


def turn(pg: Page) -> Page:
    """Homology of ``pg`` with the next differential attached.

    A cell survives only when both its outgoing target and incoming source lie
    in the window, so the window shrinks by ``r`` in ``p``.
    """
    keep = [cell for cell in pg.window if pg.target(cell) in pg.window and pg.source(cell) in pg.window]
    if not keep:
        raise WindowTooSmall(f"no cell of the page-{pg.r} window has both neighbours inside it")
    dims = {}
    for cell in keep:
        out_rank = rank(pg.diff[cell])
        in_rank = rank(pg.diff[pg.source(cell)])
        dims[cell] = pg.cells[cell] - out_rank - in_rank
    if pg.lc is None:
        return Page(pg.r + 1, pg.n, pg.N, frozenset(keep), dims, {}, {}, None)
    nxt = page(pg.lc, pg.r + 1, keep)
    if dict(nxt.cells) != dims:
        raise FloerSSError("homology of page differs from directly computed next page")
    return nxt


def e_infinity(lc: LaurentComplex, window: Iterable[Cell] | None = None) -> Page:
    """Page ``ν + 1``; every later differential vanishes there."""
    r = lc.base.nu + 1
    try:
        return page(lc, r, window)
    except RangeError as exc:
        raise WindowTooSmall(str(exc)) from exc


def check_statement5(lc: LaurentComplex, window: Iterable[Cell] | None = None) -> bool:
    """For each ``p`` in the window, ``Σ_q E_∞^{p,q}`` equals the total Floer homology."""
    c = lc.base
    if window is None:
        window = band_window(c.n, c.N, (0, 1))
    window = frozenset(window)
    by_p: dict[int, set[int]] = {}
    for p, q in window:
        by_p.setdefault(p, set()).add(p + q - p * c.N)
    for p, degs in by_p.items():
        if not set(range(c.n + 1)) <= degs:
            raise WindowTooSmall(f"column p={p} does not cover Morse degrees 0..{c.n}")
    einf = e_infinity(lc, window)
    total_hf = sum(homology(lc, l) for l in range(c.N))
    for p in by_p:
        if sum(d for (pp, _), d in einf.cells.items() if pp == p) != total_hf:
            return False
    return True


def pages_up_to(lc: LaurentComplex, r_max: int, window: Iterable[Cell] | None = None) -> list[Page]:
    comp = CellComputer(lc)
    return [page(lc, r, window, computer=comp) for r in range(r_max + 1)]


def laurent_for_pages(c, window: Iterable[Cell], r_max: int) -> LaurentComplex:
    """A Laurent complex wide enough for every page up to ``r_max`` on ``window``."""
    degrees = [p + q for p, q in window]
    lo = min(degrees) - 1
    hi = max(degrees) + 2
    return build_laurent(c, min(lo, -c.N), max(hi, c.n + c.N))


def theorem_checks(c: FloerComplex) -> dict[str, bool]:
    """Pass/fail of each structural property of the spectral sequence on one complex.

    ``page0``: cells are chain dimensions and ``δ_0 = ∂_0``; ``page1``: cells are
    Morse Betti numbers; ``collapse``: ``δ_r = 0`` for ``r = ν+1, ν+2``;
    ``convergence``: diagonal sums of the last page equal Floer homology;
    ``fixed_p_sum``: each filtration column sums to the total Floer homology.
    """
    res: dict[str, bool] = {"valid": not validate(c)}
    if not res["valid"]:
        return res
    n, N, r_top = c.n, c.N, c.nu + 1
    degrees = range(N)
    window = diagonal_window(n, N, degrees)
    lc = laurent_for_pages(c, window, r_top + 1)
    comp = CellComputer(lc)
    beta = morse_homology(c)

    def chain_dim(p: int, q: int, vec) -> int:
        i = p + q - p * N
        return vec[i] if 0 <= i <= n else 0

    e0 = page(lc, 0, window, computer=comp)
    ok0 = all(d == chain_dim(p, q, c.dims) for (p, q), d in e0.cells.items())
    ok0 = ok0 and all(
        e0.diff[(p, q)] == c.op(0, p + q - p * N) for (p, q) in window if 0 <= p + q - p * N <= n
    )
    res["page0"] = ok0
    e1 = page(lc, 1, window, computer=comp)
    res["page1"] = all(d == chain_dim(p, q, beta) for (p, q), d in e1.cells.items())
    last = page(lc, r_top, window, computer=comp)
    after = page(lc, r_top + 1, window, computer=comp)
    res["collapse"] = last.differentials_vanish() and after.differentials_vanish()
    hf = [homology(lc, l) for l in degrees]
    res["convergence"] = all(last.total(l) == hf[l] for l in degrees)
    band = band_window(n, N, (0, 1))
    blc = laurent_for_pages(c, band, r_top)
    col = page(blc, r_top, band)
    total = sum(hf)
    res["fixed_p_sum"] = all(sum(d for (p, _), d in col.cells.items() if p == pp) == total for pp in (0, 1))
    return res
