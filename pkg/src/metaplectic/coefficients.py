"""Gelfand-Tsetlin coefficients, admissible first rows and the F / f sums.

Admissible rows describe a single branching component by its first Gamma
row: for a weight lam of length L, a row (G_1, ..., G_{L-1}) with G_L = 0 is
admissible when G_{j+1} <= G_j <= G_{j+1} + lam_j - lam_{j+1} + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .crystal import BOTH, BOXED, CIRCLED, GTPattern, decorations, gamma_of
from .laurent import Exps, LaurentPoly, _accumulate
from .scalars import ScalarPoly, g_flat, h_flat


def gt_coefficient(p: GTPattern, n: int) -> ScalarPoly:
    g = gamma_of(p)
    out = ScalarPoly.const(1, n)
    for (i, j), deco in decorations(p).items():
        if deco == CIRCLED:
            continue
        if deco == BOTH:
            return ScalarPoly.zero(n)
        val = g.entry(i, j)
        out = out * (g_flat(val, n) if deco == BOXED else h_flat(val, n))
        if not out:
            return out
    return out


@dataclass(frozen=True)
class AdmissibleRow:
    gamma_row: Tuple[int, ...]
    lam: Tuple[int, ...]

    def __post_init__(self):
        if len(self.gamma_row) != len(self.lam) - 1:
            raise ValueError("a first row has one entry fewer than its weight")

    def entry(self, j: int) -> int:
        """Gamma_{1,j} for 1 <= j <= len(lam); the last one is 0."""
        return self.gamma_row[j - 1] if j <= len(self.gamma_row) else 0

    def bounds(self, j: int) -> Tuple[int, int]:
        nxt = self.entry(j + 1)
        return nxt, nxt + self.lam[j - 1] - self.lam[j] + 1


class RowClass(NamedTuple):
    admissible: bool
    k_admissible: bool
    strict: bool


def classify_row(row: AdmissibleRow, k: Optional[int] = None) -> RowClass:
    m = len(row.gamma_row)
    admissible = all(lo <= row.entry(j) <= hi for j in range(1, m + 1) for lo, hi in [row.bounds(j)])
    k_ok = admissible and (k is None or all(row.entry(j) == 0 for j in range(k + 2, m + 1)))
    nonstrict = any(
        row.entry(j - 1) == row.entry(j) == row.bounds(j)[1] for j in range(2, m + 1)
    )
    return RowClass(admissible, k_ok, not nonstrict)


def admissible_rows(lam: Sequence[int], k: Optional[int] = None) -> Iterator[AdmissibleRow]:
    """All lam-admissible rows (and (lam, k)-admissible if k is given), built from the right."""
    lam = tuple(lam)
    m = len(lam) - 1

    def build(j: int, suffix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if j == 0:
            yield suffix
            return
        nxt = suffix[0] if suffix else 0
        if k is not None and j > k + 1:
            choices = [0] if nxt == 0 else []
        else:
            choices = range(nxt, nxt + lam[j - 1] - lam[j] + 2)
        for g in choices:
            yield from build(j - 1, (g,) + suffix)

    for row in build(m, ()):
        yield AdmissibleRow(row, lam)


def row_weight(row: AdmissibleRow) -> Exps:
    if not classify_row(row).admissible:
        raise ValueError(f"row {row.gamma_row} is not admissible for {row.lam}")
    return _row_weight(row)


def _row_weight(row: AdmissibleRow) -> Exps:
    lam = row.lam
    m = len(lam) - 1
    # entry t: lam_{m+1-t} + Gamma_{1,m-t} - Gamma_{1,m+1-t}, with Gamma_{1,0} = 0
    out = []
    for t in range(m + 1):
        left = row.entry(m - t) if m - t >= 1 else 0
        out.append(lam[m - t] + left - row.entry(m + 1 - t))
    return tuple(out)


def row_coefficient(row: AdmissibleRow, n: int) -> ScalarPoly:
    out = ScalarPoly.const(1, n)
    for j in range(1, len(row.gamma_row) + 1):
        val = row.entry(j)
        lo, hi = row.bounds(j)
        if val == lo:
            continue
        if val == hi:
            out = out * g_flat(val, n)
        elif lo < val < hi:
            out = out * h_flat(val, n)
        else:
            return ScalarPoly.zero(n)
    return out


def delta(A: int, B: int, n: int) -> ScalarPoly:
    if A < B:
        return h_flat(A, n)
    if A == B:
        return h_flat(A, n) - 1
    return ScalarPoly.zero(n)


def admissible_row_sum(lam: Sequence[int], n: int, k: Optional[int] = None, nonzero_at: Optional[int] = None) -> LaurentPoly:
    """sum of G_1(Gamma) x^{wt(Gamma)} over (lam, k)-admissible rows, optionally with Gamma_{1,j} != 0."""
    lam = tuple(lam)
    r = len(lam) - 1
    out = {}
    for row in admissible_rows(lam, k):
        if nonzero_at is not None and row.entry(nonzero_at) == 0:
            continue
        c = row_coefficient(row, n)
        if c:
            _accumulate(out, {_row_weight(row): c})
    return LaurentPoly(r, n, out, _trusted=True)


def big_F(mu: Sequence[int], a: int, n: int) -> LaurentPoly:
    """F_{mu,a} in the variables x_1..x_m, m = len(mu)."""
    mu = tuple(mu)
    if a < 1:
        raise ValueError("a must be positive")
    m = len(mu)
    if m < 2:
        return LaurentPoly.zero(max(m - 1, 0), n)
    out = {}
    for row in admissible_rows(mu):
        if row.gamma_row[-1] == 0:
            continue
        c = delta(a, row.gamma_row[0], n) * row_coefficient(row, n)
        if c:
            e = list(_row_weight(row))
            e[-1] += a
            _accumulate(out, {tuple(e): c})
    return LaurentPoly(m - 1, n, out, _trusted=True)


def _h_new(g12: int, top: int, n: int) -> ScalarPoly:
    if g12 < top:
        return h_flat(g12, n)
    if g12 == top:
        return g_flat(g12, n)
    return ScalarPoly.zero(n)


def little_f(a: int, gamma13: int, lam2: int, lam3: int, n: int, r: int) -> LaurentPoly:
    """f_{a,Gamma_0} as a polynomial in x_1..x_r; only x_{r-1} and x_r occur."""
    if a % n:
        raise ValueError("little_f is defined for n | a")
    if r < 2:
        raise ValueError("little_f needs r >= 2")
    top = gamma13 + lam2 - lam3 + 1
    out = {}
    for g12 in range(1, top + 1):
        c = delta(a, g12, n) * _h_new(g12, top, n)
        if c:
            e = [0] * r
            e[r - 2] = lam3 + g12 - gamma13
            e[r - 1] = lam2 + a - g12
            _accumulate(out, {tuple(e): c})
    return LaurentPoly(r - 1, n, out, _trusted=True)


class PRecovery(NamedTuple):
    k: int
    u: int
    poly: LaurentPoly


def p_ku(a: int, gamma13: int, lam2: int, lam3: int, n: int, r: int) -> PRecovery:
    """x_r^n f / ((1 - v)(x_{r-1} x_r)^{lam3 + a - gamma13}) with its (k, u) labels."""
    top = gamma13 + lam2 - lam3 + 1
    k, u = divmod(top - a - 1, n)
    u += 1
    f = little_f(a, gamma13, lam2, lam3, n, r)
    e = [0] * r
    s = lam3 + a - gamma13
    e[r - 2] = -s
    e[r - 1] = n - s
    shifted = f.shift(e)
    out = {ex: c.divide_one_minus_v() for ex, c in shifted.terms.items()}
    return PRecovery(k, u, LaurentPoly(r - 1, n, out))
