"""Euler-characteristic restrictions for complexes with vanishing Floer homology.

``γ_j`` sums Betti numbers over a residue class mod ``N``, ``χ_{s,t}`` is the
alternating ``γ``-sum from ``s`` to ``t``, and ``κ_s`` does the same count for
chain dimensions (critical points of a Morse function).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .complex import CochainComplex, FloerComplex, build_laurent, homology, morse_homology
from .errors import HFNotZero, SRange
from .gf2 import BitMatrix, rank

__all__ = [
    "EulerData",
    "gamma",
    "chi_st",
    "kappa",
    "lemma_sides",
    "fold",
    "verify_inequalities",
    "lambda_bound",
    "InequalityReport",
    "check_lemma_window",
]


def gamma(beta: Sequence[int], N: int, j: int) -> int:
    """``Σ_k β_{kN+j}``; ``j`` is read mod ``N``."""
    return sum(b for i, b in enumerate(beta) if (i - j) % N == 0)


def kappa(counts: Sequence[int], N: int, s: int) -> int:
    if any(c < 0 for c in counts):
        raise ValueError("critical-point counts must be nonnegative")
    return gamma(counts, N, s)


def _alternating(values: Sequence[int], N: int, s: int, t: int) -> int:
    if s > t:
        raise SRange(f"need s <= t, got s={s}, t={t}")
    return sum((-1) ** (i - s) * gamma(values, N, i) for i in range(s, t + 1))


def chi_st(beta: Sequence[int], N: int, s: int, t: int) -> int:
    """``γ_s - γ_{s+1} + ... + (-1)^{t-s} γ_t``."""
    return _alternating(beta, N, s, t)


@dataclass(frozen=True)
class EulerData:
    beta: tuple[int, ...]
    N: int
    morse_counts: tuple[int, ...] | None = None
    gammas: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", tuple(self.beta))
        if self.morse_counts is not None:
            counts = tuple(self.morse_counts)
            if len(counts) != len(self.beta):
                raise ValueError("one critical-point count per degree expected")
            bad = [i for i, (c, b) in enumerate(zip(counts, self.beta)) if c < b]
            if bad:
                raise ValueError(f"counts violate the weak Morse inequalities in degrees {bad}")
            object.__setattr__(self, "morse_counts", counts)
        object.__setattr__(self, "gammas", tuple(gamma(self.beta, self.N, j) for j in range(self.N)))


# -- the linear-algebra lemma ----------------------------------------------


def _chi_dims(d: CochainComplex, s: int, t: int) -> int:
    return sum((-1) ** (i - s) * d.dim(i) for i in range(s, t + 1))


def lemma_sides(d: CochainComplex, s: int, t: int) -> tuple[int, int]:
    """Left side from the chain dimensions, right side from homology and two boundary ranks."""
    if s > t:
        raise SRange(f"need s <= t, got s={s}, t={t}")
    d.check()
    lhs = _chi_dims(d, s, t)
    hom = sum((-1) ** (i - s) * d.homology_dim(i) for i in range(s, t + 1))
    rhs = hom + d.boundary_rank(s - 1) + (-1) ** (t - s) * d.boundary_rank(t)
    return lhs, rhs


def fold(c: FloerComplex, lo: int, hi: int) -> CochainComplex:
    """The Z-graded complex ``D^i = ⊕_{j ≡ i (N)} C^j`` with ``d = ∂_0 + ... + ∂_ν``, for ``lo <= i <= hi``.

    Only the window is materialised; the last differential maps to zero.
    It is isomorphic to the Laurent complex in those degrees.
    """
    lc = build_laurent(c, lo, hi + 1)
    dims = tuple(lc.dim(l) for l in range(lo, hi + 1))
    diffs = [lc.d(l) for l in range(lo, hi)] + [BitMatrix.zeros(0, lc.dim(hi))]
    return CochainComplex(lo, dims, tuple(diffs))


# -- the inequalities --------------------------------------------------------


@dataclass(frozen=True)
class InequalityReport:
    s: int
    t: int
    nu: int
    chi: int
    checks: Mapping[str, bool]
    detail: Mapping[str, tuple[int, int, int]]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "nu": self.nu,
            "chi": self.chi,
            "checks": dict(self.checks),
            "bounds": {k: list(v) for k, v in self.detail.items()},
        }


def verify_inequalities(c: FloerComplex, s: int, t: int) -> InequalityReport:
    """Evaluate the applicable inequality families on a complex with vanishing homology.

    ``*_nu`` checks use ``ν`` and the ``γ``'s; ``*_kappa`` checks use this
    complex's own chain dimensions as critical-point counts.  The identity
    check confirms ``χ_{s,t}`` against the folded complex's boundary ranks.
    """
    if s > t:
        raise SRange(f"need s <= t, got s={s}, t={t}")
    lc = build_laurent(c)
    if any(homology(lc, l) for l in range(c.N)):
        raise HFNotZero("the total differential has nonzero homology")
    beta = morse_homology(c)
    N, nu = c.N, c.nu
    g = lambda j: gamma(beta, N, j)  # noqa: E731
    k = lambda j: kappa(c.dims, N, j)  # noqa: E731
    chi = chi_st(beta, N, s, t)
    lam_s = min(k(s - 1), k(s))
    lam_t = min(k(t), k(t + 1))
    checks: dict[str, bool] = {}
    detail: dict[str, tuple[int, int, int]] = {}
    if (t - s) % 2 == 0:
        hi_nu = nu * min(g(s - 1), g(s)) + nu * min(g(t), g(t + 1))
        checks["even_nu"] = 0 <= chi <= hi_nu
        detail["even_nu"] = (0, chi, hi_nu)
        checks["even_kappa"] = chi <= lam_s + lam_t
        detail["even_kappa"] = (chi, chi, lam_s + lam_t)
    else:
        lo_nu = -nu * min(g(t), g(t + 1))
        hi_nu = nu * min(g(s - 1), g(s))
        checks["odd_nu"] = lo_nu <= chi <= hi_nu
        detail["odd_nu"] = (lo_nu, chi, hi_nu)
        checks["odd_kappa"] = -lam_t <= chi <= lam_s
        detail["odd_kappa"] = (-lam_t, chi, lam_s)
    # identity behind the bounds: χ = rank d(D^{s-1}) - rank ∂_0(C^{s-1}) ± (rank d(D^t) - rank ∂_0(C^t))
    folded = fold(c, s - 1, t + 1)
    d_s = folded.boundary_rank(s - 1)
    d_t = folded.boundary_rank(t)
    p_s = _folded_morse_rank(c, s - 1)
    p_t = _folded_morse_rank(c, t)
    ident = (d_s - p_s) + (-1) ** (t - s) * (d_t - p_t)
    checks["identity"] = ident == chi
    detail["identity"] = (ident, chi, ident)
    return InequalityReport(s, t, nu, chi, checks, detail)


def _folded_morse_rank(c: FloerComplex, i: int) -> int:
    """Rank of ``∂_0`` on ``⊕_{j ≡ i (N)} C^j``."""
    return sum(rank(c.op(0, j)) for j in range(c.n + 1) if (j - i) % c.N == 0)


def lambda_bound(family: Iterable[Sequence[int]], N: int, s: int, t: int | None = None) -> int:
    """Minimum of the ``κ``-expression over a finite family of count vectors.

    With ``t`` omitted this is the single-index quantity ``min(κ_{s-1}, κ_s)``;
    otherwise the two-index sum.  It bounds the true minimum from above.
    """
    best = None
    for counts in family:
        val = min(kappa(counts, N, s - 1), kappa(counts, N, s))
        if t is not None:
            val += min(kappa(counts, N, t), kappa(counts, N, t + 1))
        best = val if best is None else min(best, val)
    if best is None:
        raise ValueError("empty family")
    return best


def check_lemma_window(d: CochainComplex, windows: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Windows where the two sides disagree."""
    bad = []
    for s, t in windows:
        lhs, rhs = lemma_sides(d, s, t)
        if lhs != rhs:
            bad.append((s, t))
    return bad

