"""Gelfand-Tsetlin patterns as crystal vertices.

A pattern has rows a[0] (the top row, length r+1) down to a[r] (length 1);
row i holds a_{i,i}, ..., a_{i,r}.  The Gamma-array entry

    Gamma_{ij} = sum_{k=j}^{r} (a_{ik} - a_{i-1,k})

doubles as the BZL string of the vertex, with Gamma_{ij} sitting at BZL
position C(r-i+1, 2) + (j - i + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

Row = Tuple[int, ...]

UNDECORATED = "none"
CIRCLED = "circled"
BOXED = "boxed"
BOTH = "both"


class InvalidGamma(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GTPattern:
    rows: Tuple[Row, ...]

    @property
    def r(self) -> int:
        return len(self.rows) - 1

    @property
    def top(self) -> Row:
        return self.rows[0]

    def entry(self, i: int, j: int) -> int:
        """a_{ij}, 0 <= i <= j <= r."""
        return self.rows[i][j - i]

    def without_top(self) -> "GTPattern":
        return GTPattern(self.rows[1:])

    def render(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)


@dataclass(frozen=True)
class GammaArray:
    """Rows Gamma_{i,i..r} for i = 1..r, plus the pattern's top row."""

    rows: Tuple[Row, ...]
    top: Row

    @property
    def r(self) -> int:
        return len(self.top) - 1

    def entry(self, i: int, j: int) -> int:
        if j == self.r + 1:
            return 0
        return self.rows[i - 1][j - i]

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def _check_top(top: Sequence[int]) -> Row:
    top = tuple(int(x) for x in top)
    if len(top) < 1:
        raise ValueError("empty top row")
    if any(top[k] < top[k + 1] for k in range(len(top) - 1)):
        raise ValueError(f"top row {top} is not non-increasing")
    if top[-1] < 0:
        raise ValueError(f"top row {top} has negative entries")
    return top


def _below(row: Row) -> Iterator[Row]:
    """All rows interleaving under `row`."""
    ranges = [range(row[k + 1], row[k] + 1) for k in range(len(row) - 1)]
    for cand in product(*ranges):
        yield tuple(cand)


def enumerate_patterns(top_row: Sequence[int]) -> List[GTPattern]:
    top = _check_top(top_row)
    out: List[GTPattern] = []

    def grow(rows: List[Row]) -> None:
        if len(rows[-1]) == 1:
            out.append(GTPattern(tuple(rows)))
            return
        for nxt in _below(rows[-1]):
            grow(rows + [nxt])

    grow([top])
    out.sort(key=lambda p: tuple(x for row in p.rows for x in row))
    return out


def is_valid_pattern(rows: Sequence[Sequence[int]]) -> bool:
    rows = [tuple(r) for r in rows]
    for i in range(1, len(rows)):
        if len(rows[i]) != len(rows[i - 1]) - 1:
            return False
        for k, x in enumerate(rows[i]):
            if not rows[i - 1][k] >= x >= rows[i - 1][k + 1]:
                return False
    return True


def gamma_of(p: GTPattern) -> GammaArray:
    r = p.r
    rows = []
    for i in range(1, r + 1):
        row = []
        for j in range(i, r + 1):
            row.append(sum(p.entry(i, k) - p.entry(i - 1, k) for k in range(j, r + 1)))
        rows.append(tuple(row))
    return GammaArray(tuple(rows), p.top)


def pattern_of_gamma(top_row: Sequence[int], g: GammaArray | Sequence[Sequence[int]]) -> GTPattern:
    top = tuple(int(x) for x in top_row)
    r = len(top) - 1
    grows = g.rows if isinstance(g, GammaArray) else tuple(tuple(x) for x in g)
    if len(grows) != r or any(len(grows[i - 1]) != r - i + 1 for i in range(1, r + 1)):
        raise InvalidGamma("Gamma-array shape does not match the top row")
    rows = [top]
    for i in range(1, r + 1):
        prev = rows[-1]  # a_{i-1, i-1..r}

        def tail(j: int) -> int:
            # sum_{k=j}^r a_{i,k} = Gamma_{ij} + sum_{k=j}^r a_{i-1,k}
            if j == r + 1:
                return 0
            return grows[i - 1][j - i] + sum(prev[k - (i - 1)] for k in range(j, r + 1))

        rows.append(tuple(tail(j) - tail(j + 1) for j in range(i, r + 1)))
    if not is_valid_pattern(rows):
        raise InvalidGamma(f"no interleaving pattern with top row {top} has this Gamma-array")
    return GTPattern(tuple(rows))


def decorations(p: GTPattern) -> Dict[Tuple[int, int], str]:
    out = {}
    for i in range(1, p.r + 1):
        for j in range(i, p.r + 1):
            a = p.entry(i, j)
            circled = a == p.entry(i - 1, j)
            boxed = a == p.entry(i - 1, j - 1)
            out[(i, j)] = BOTH if circled and boxed else CIRCLED if circled else BOXED if boxed else UNDECORATED
    return out


def row_sums(p: GTPattern) -> List[int]:
    return [sum(row) for row in p.rows]


def weight_of(p: GTPattern) -> Row:
    d = row_sums(p)
    r = p.r
    return (d[r],) + tuple(d[i - 1] - d[i] for i in range(r, 0, -1))


def interleaves(mu: Sequence[int], top: Sequence[int]) -> bool:
    return len(mu) == len(top) - 1 and all(top[k] >= mu[k] >= top[k + 1] for k in range(len(mu)))


def mu_components(top_row: Sequence[int]) -> List[Tuple[Row, List[GTPattern]]]:
    top = _check_top(top_row)
    pats = enumerate_patterns(top)
    groups: Dict[Row, List[GTPattern]] = {}
    for p in pats:
        groups.setdefault(p.rows[1] if p.r >= 1 else (), []).append(p)
    return [(mu, groups[mu]) for mu in sorted(groups, reverse=True)]


def lowest_vertex(top_row: Sequence[int], mu: Sequence[int]) -> GTPattern:
    top = tuple(top_row)
    mu = tuple(mu)
    if not interleaves(mu, top):
        raise ValueError(f"{mu} does not interleave with {top}")
    return GTPattern((top,) + tuple(mu[i:] for i in range(len(mu))))


def bzl_string(g: GammaArray) -> List[int]:
    """b_1, ..., b_N read off the Gamma-array."""
    r = g.r
    b = [0] * comb(r + 1, 2)
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            b[comb(r - i + 1, 2) + (j - i + 1) - 1] = g.entry(i, j)
    return b


def demazure_members(top_row: Sequence[int], w_length: int) -> List[GTPattern]:
    """Vertices of the Demazure crystal for the first w_length letters of the favourite word."""
    top = _check_top(top_row)
    r = len(top) - 1
    if not 0 <= w_length <= comb(r + 1, 2):
        raise ValueError(f"w_length {w_length} out of range 0..{comb(r + 1, 2)}")
    return [p for p in enumerate_patterns(top) if not any(bzl_string(gamma_of(p))[w_length:])]


def component_in_demazure(top: Sequence[int], mu: Sequence[int], k: int) -> bool:
    """Branching-based test: mu_j equals top_{j+1} for every j > k+1."""
    r = len(top) - 1
    return all(mu[j - 1] == top[j] for j in range(k + 2, r + 1))


def lusztig_data_of(g: GammaArray) -> Dict[Tuple[int, int], int]:
    """m_{i,j} = Gamma_{h,k} - Gamma_{h,k+1} with i = r+1-k, j = r+2-h."""
    r = g.r
    return {
        (r + 1 - k, r + 2 - h): g.entry(h, k) - g.entry(h, k + 1)
        for h in range(1, r + 1)
        for k in range(h, r + 1)
    }


def simple_root(i: int, r: int) -> Row:
    e = [0] * (r + 1)
    e[i - 1] = 1
    e[i] = -1
    return tuple(e)


def root(i: int, j: int, r: int) -> Row:
    e = [0] * (r + 1)
    e[i - 1] += 1
    e[j - 1] -= 1
    return tuple(e)
