"""Sparse Laurent polynomials over the scalar ring, and rational elements.

A rational element keeps its denominator as a multiset of binomial factors
(1 - v^k x^{n(e_i - e_j)}) with i < j.  Factors are only expanded when two
elements are compared or when a polynomial is extracted by exact division.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .scalars import ScalarPoly, default_v_symbol

Exps = Tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when an exact binomial quotient does not exist."""


class LaurentPoly:
    """Immutable map from exponent vectors (length r+1) to nonzero scalars."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms: Mapping[Exps, ScalarPoly] | None = None, *, _trusted: bool = False):
        self.r = r
        self.n = n
        if _trusted:
            self.terms: Dict[Exps, ScalarPoly] = terms  # type: ignore[assignment]
        else:
            clean: Dict[Exps, ScalarPoly] = {}
            for e, c in (terms or {}).items():
                e = tuple(int(x) for x in e)
                if len(e) != r + 1:
                    raise ValueError(f"exponent vector {e} has wrong length for rank {r}")
                if isinstance(c, int):
                    c = ScalarPoly.const(c, n)
                if c.n != n:
                    raise ValueError("scalar degree does not match polynomial degree")
                if c:
                    clean[e] = c
            self.terms = clean

    # constructors
    @classmethod
    def zero(cls, r: int, n: int) -> "LaurentPoly":
        return cls(r, n, {}, _trusted=True)

    @classmethod
    def monomial(cls, exps: Sequence[int], n: int, coeff: ScalarPoly | int = 1) -> "LaurentPoly":
        exps = tuple(int(x) for x in exps)
        if isinstance(coeff, int):
            coeff = ScalarPoly.const(coeff, n)
        return cls(len(exps) - 1, n, {exps: coeff} if coeff else {}, _trusted=True)

    @classmethod
    def one(cls, r: int, n: int) -> "LaurentPoly":
        return cls.monomial((0,) * (r + 1), n)

    # helpers
    def _check(self, other: "LaurentPoly") -> None:
        if self.r != other.r or self.n != other.n:
            raise ValueError(f"mismatched (r, n): ({self.r}, {self.n}) vs ({other.r}, {other.n})")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exps: Sequence[int]) -> ScalarPoly:
        return self.terms.get(tuple(exps), ScalarPoly.zero(self.n))

    # arithmetic
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return LaurentPoly(self.r, self.n, out, _trusted=True)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.r, self.n, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, {e: -c for e, c in other.terms.items()})
        return LaurentPoly(self.r, self.n, out, _trusted=True)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, ScalarPoly)):
            return self.scale(other)
        self._check(other)
        out: Dict[Exps, ScalarPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if e in out:
                    s = out[e] + prod
                    if s:
                        out[e] = s
                    else:
                        del out[e]
                elif prod:
                    out[e] = prod
        return LaurentPoly(self.r, self.n, out, _trusted=True)

    __rmul__ = __mul__

    def scale(self, s: ScalarPoly | int) -> "LaurentPoly":
        if isinstance(s, int):
            s = ScalarPoly.const(s, self.n)
        if not s:
            return LaurentPoly.zero(self.r, self.n)
        out = {}
        for e, c in self.terms.items():
            p = c * s
            if p:
                out[e] = p
        return LaurentPoly(self.r, self.n, out, _trusted=True)

    def shift(self, exps: Sequence[int], s: ScalarPoly | int = 1) -> "LaurentPoly":
        """Multiply by the monomial s * x^exps."""
        if isinstance(s, int):
            s = ScalarPoly.const(s, self.n)
        one = s.terms == {((0,) * (self.n - 1), 0): 1}
        out = {}
        for e, c in self.terms.items():
            p = c if one else c * s
            if p:
                out[tuple(a + b for a, b in zip(e, exps))] = p
        return LaurentPoly(self.r, self.n, out, _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.r == other.r and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.r, self.n, frozenset(self.terms.items())))

    # rendering
    def render(self, v_symbol: str | None = None) -> str:
        return render_poly(self, v_symbol)

    def to_json(self, v_symbol: str | None = None) -> List[dict]:
        sym = v_symbol or default_v_symbol(self.n)
        return [{"exps": list(e), "coeff": self.terms[e].render(sym)} for e in sorted(self.terms)]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly(r={self.r}, n={self.n}, {self.render()!r})"


def _accumulate(out: Dict[Exps, ScalarPoly], add: Mapping[Exps, ScalarPoly]) -> None:
    for e, c in add.items():
        if e in out:
            s = out[e] + c
            if s:
                out[e] = s
            else:
                del out[e]
        elif c:
            out[e] = c


def poly_sum(polys: Iterable[LaurentPoly], r: int, n: int) -> LaurentPoly:
    out: Dict[Exps, ScalarPoly] = {}
    for p in polys:
        _accumulate(out, p.terms)
    return LaurentPoly(r, n, out, _trusted=True)


def _monomial_text(e: Exps) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def render_poly(f: LaurentPoly, v_symbol: str | None = None) -> str:
    if not f.terms:
        return "0"
    sym = v_symbol or default_v_symbol(f.n)
    out = []
    for idx, e in enumerate(sorted(f.terms)):
        c = f.terms[e]
        mono = _monomial_text(e)
        if len(c.terms) == 1:
            text = c.render(sym)
            neg = text.startswith("-")
            body = text[1:] if neg else text
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
        else:
            neg = False
            body = f"({c.render(sym)})" + (f"*{mono}" if mono else "")
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def permute_variables(w: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """Plain action: x^lam -> x^{w lam}, where w sends index a to w[a-1] (1-based images)."""
    if len(w) != f.r + 1:
        raise ValueError("permutation size does not match the number of variables")
    out = {}
    for e, c in f.terms.items():
        new = [0] * len(e)
        for a, img in enumerate(w):
            new[img - 1] = e[a]
        out[tuple(new)] = c
    return LaurentPoly(f.r, f.n, out, _trusted=True)


@dataclass(frozen=True, order=True)
class BinomialFactor:
    """The factor (1 - v^c_power * x^{n(e_i - e_j)}) with 1 <= i < j."""

    i: int
    j: int
    c_power: int = 0

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError("BinomialFactor needs 1 <= i < j; use normalized_factor for negative roots")

    def root_exps(self, r: int, n: int) -> Exps:
        e = [0] * (r + 1)
        e[self.i - 1] = n
        e[self.j - 1] = -n
        return tuple(e)

    def expand(self, r: int, n: int) -> LaurentPoly:
        return LaurentPoly(
            r,
            n,
            {
                (0,) * (r + 1): ScalarPoly.const(1, n),
                self.root_exps(r, n): ScalarPoly.v_power(self.c_power, n, -1),
            },
        )


def normalized_factor(i: int, j: int, c_power: int, r: int, n: int) -> Tuple[BinomialFactor, LaurentPoly]:
    """Write (1 - v^c x^{n(e_i - e_j)}) as multiplier^{-1} times a positive-root factor.

    Returns (factor, numerator_multiplier) so that 1/(original) = multiplier/factor.
    """
    if i < j:
        return BinomialFactor(i, j, c_power), LaurentPoly.one(r, n)
    # 1 - c x^{-n g} = -c x^{-n g} (1 - c^{-1} x^{n g})
    f = BinomialFactor(j, i, -c_power)
    mult = LaurentPoly.monomial(f.root_exps(r, n), n, ScalarPoly.v_power(-c_power, n, -1))
    return f, mult


def exact_divide_binomial(p: LaurentPoly, d: BinomialFactor) -> LaurentPoly:
    """Return q with q * d == p, or raise NotDivisible."""
    n = p.n
    i, j = d.i - 1, d.j - 1
    lines: Dict[Exps, Dict[int, ScalarPoly]] = {}
    for e, c in p.terms.items():
        pos, rem = divmod(e[i], n)
        key = list(e)
        key[i] = rem
        key[j] = e[i] + e[j]
        lines.setdefault(tuple(key), {})[pos] = c
    out: Dict[Exps, ScalarPoly] = {}
    k = d.c_power
    for key, pts in lines.items():
        lo, hi = min(pts), max(pts)
        q = None
        for t in range(lo, hi + 1):
            cur = pts.get(t)
            if q is not None and q:
                shifted = q.shift_v(k)
                cur = shifted if cur is None else cur + shifted
            q = cur
            if t < hi and q:
                e = list(key)
                e[i] = key[i] + n * t
                e[j] = key[j] - e[i]
                out[tuple(e)] = q
        if q:
            raise NotDivisible(f"remainder along direction e{d.i}-e{d.j}")
    return LaurentPoly(p.r, p.n, out, _trusted=True)


class RationalElement:
    """numerator / product(denominator factors)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[BinomialFactor] = ()):
        self.num = num
        self.den: Tuple[BinomialFactor, ...] = tuple(sorted(den))

    @property
    def r(self) -> int:
        return self.num.r

    @property
    def n(self) -> int:
        return self.num.n

    @classmethod
    def of(cls, f: LaurentPoly) -> "RationalElement":
        return cls(f, ())

    def __add__(self, other: "RationalElement") -> "RationalElement":
        return rat_add(self, other)

    def __neg__(self) -> "RationalElement":
        return RationalElement(-self.num, self.den)

    def __sub__(self, other: "RationalElement") -> "RationalElement":
        return rat_add(self, -other)

    def mul_poly(self, f: LaurentPoly) -> "RationalElement":
        return RationalElement(self.num * f, self.den)

    def __repr__(self) -> str:
        d = " ".join(f"(1-v^{b.c_power}a{b.i}{b.j})" for b in self.den)
        return f"RationalElement({self.num.render()!r} / {d or '1'})"


def expand_factors(factors: Iterable[BinomialFactor], r: int, n: int) -> LaurentPoly:
    out = LaurentPoly.one(r, n)
    for f in factors:
        out = out * f.expand(r, n)
    return out


def rat_add(a: RationalElement, b: RationalElement) -> RationalElement:
    ca, cb = Counter(a.den), Counter(b.den)
    common = ca | cb
    r, n = a.r, a.n
    na = a.num * expand_factors((common - ca).elements(), r, n) if common != ca else a.num
    nb = b.num * expand_factors((common - cb).elements(), r, n) if common != cb else b.num
    return RationalElement(na + nb, common.elements())


def rat_sum(items: Iterable[RationalElement], r: int, n: int) -> RationalElement:
    items = list(items)
    common: Counter = Counter()
    for it in items:
        common |= Counter(it.den)
    total = LaurentPoly.zero(r, n)
    for it in items:
        missing = common - Counter(it.den)
        total = total + (it.num * expand_factors(missing.elements(), r, n) if missing else it.num)
    return RationalElement(total, common.elements())


def rat_eq(a: RationalElement, b: RationalElement) -> bool:
    ca, cb = Counter(a.den), Counter(b.den)
    shared = ca & cb
    left = a.num * expand_factors((cb - shared).elements(), a.r, a.n)
    right = b.num * expand_factors((ca - shared).elements(), b.r, b.n)
    return left == right


def rat_to_poly(a: RationalElement) -> LaurentPoly:
    q = a.num
    for f in a.den:
        q = exact_divide_binomial(q, f)
    return q


def deformed_denominator(r: int, n: int, deformed: bool = True) -> LaurentPoly:
    c = 1 if deformed else 0
    return expand_factors(
        (BinomialFactor(i, j, c) for i in range(1, r + 2) for j in range(i + 1, r + 2)), r, n
    )
