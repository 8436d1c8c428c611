"""Coefficient ring: integer Laurent polynomials in v with Gauss symbols.

The ring is Z[v, 1/v][g_1, ..., g_{n-1}] modulo g_a * g_{n-a} = v.  The symbol
g_a stands for the normalized Gauss sum with exponent a, so that every
operator formula stays free of 1/v.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple

GExps = Tuple[int, ...]
TermKey = Tuple[GExps, int]


class GaussMonomial(NamedTuple):
    n: int
    exps: GExps


@lru_cache(maxsize=None)
def _canonical(raw: GExps, n: int) -> Tuple[GExps, int]:
    e = list(raw)
    shift = 0
    for a in range(1, n // 2 + 1):
        b = n - a
        if a < b:
            m = min(e[a - 1], e[b - 1])
            if m:
                e[a - 1] -= m
                e[b - 1] -= m
                shift += m
        else:
            # a == n/2: g_a^2 = v
            shift += e[a - 1] // 2
            e[a - 1] %= 2
    return tuple(e), shift


def gamma_canonicalize(raw_exps: Iterable[int], n: int) -> Tuple[GaussMonomial, int]:
    """Return the canonical monomial and the power of v pulled out of it."""
    raw = tuple(int(x) for x in raw_exps)
    if n < 1:
        raise ValueError("degree n must be positive")
    if len(raw) != n - 1:
        raise ValueError(f"expected {n - 1} exponents for n={n}, got {len(raw)}")
    if any(x < 0 for x in raw):
        raise ValueError("Gauss-symbol exponents must be non-negative")
    exps, shift = _canonical(raw, n)
    return GaussMonomial(n, exps), shift


@lru_cache(maxsize=None)
def _gmul(a: GExps, b: GExps, n: int) -> Tuple[GExps, int]:
    return _canonical(tuple(x + y for x, y in zip(a, b)), n)


class ScalarPoly:
    """Immutable element of the coefficient ring for a fixed degree n."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[TermKey, int] | None = None, *, _trusted: bool = False):
        self.n = n
        if _trusted:
            self.terms: Dict[TermKey, int] = terms  # type: ignore[assignment]
        else:
            clean: Dict[TermKey, int] = {}
            for (g, ve), c in (terms or {}).items():
                if c == 0:
                    continue
                mono, shift = gamma_canonicalize(g, n)
                key = (mono.exps, ve + shift)
                val = clean.get(key, 0) + c
                if val:
                    clean[key] = val
                else:
                    clean.pop(key, None)
            self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n: int) -> "ScalarPoly":
        return cls(n, {}, _trusted=True)

    @classmethod
    def const(cls, c: int, n: int) -> "ScalarPoly":
        return cls(n, {((0,) * (n - 1), 0): c} if c else {}, _trusted=True)

    @classmethod
    def v_power(cls, k: int, n: int, c: int = 1) -> "ScalarPoly":
        return cls(n, {((0,) * (n - 1), k): c} if c else {}, _trusted=True)

    @classmethod
    def gamma(cls, a: int, n: int) -> "ScalarPoly":
        if not 1 <= a <= n - 1:
            raise ValueError(f"gamma index {a} out of range for n={n}")
        e = [0] * (n - 1)
        e[a - 1] = 1
        return cls(n, {(tuple(e), 0): 1}, _trusted=True)

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "ScalarPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched degrees {self.n} and {other.n}")

    def _coerce(self, other) -> "ScalarPoly":
        if isinstance(other, int):
            return ScalarPoly.const(other, self.n)
        if isinstance(other, ScalarPoly):
            self._check(other)
            return other
        return NotImplemented

    # arithmetic
    def __add__(self, other) -> "ScalarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            val = out.get(k, 0) + c
            if val:
                out[k] = val
            else:
                del out[k]
        return ScalarPoly(self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly(self.n, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "ScalarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ScalarPoly":
        return (-self) + other

    def __mul__(self, other) -> "ScalarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.n
        out: Dict[TermKey, int] = {}
        for (g1, v1), c1 in self.terms.items():
            for (g2, v2), c2 in other.terms.items():
                g, s = _gmul(g1, g2, n)
                key = (g, v1 + v2 + s)
                val = out.get(key, 0) + c1 * c2
                if val:
                    out[key] = val
                else:
                    del out[key]
        return ScalarPoly(n, out, _trusted=True)

    __rmul__ = __mul__

    def shift_v(self, k: int) -> "ScalarPoly":
        """Multiply by v**k."""
        if k == 0:
            return self
        return ScalarPoly(self.n, {(g, ve + k): c for (g, ve), c in self.terms.items()}, _trusted=True)

    def divide_one_minus_v(self) -> "ScalarPoly":
        """Exact quotient by (1 - v); raises ArithmeticError if it does not exist."""
        by_g: Dict[GExps, Dict[int, int]] = {}
        for (g, ve), c in self.terms.items():
            by_g.setdefault(g, {})[ve] = c
        out: Dict[TermKey, int] = {}
        for g, coeffs in by_g.items():
            lo, hi = min(coeffs), max(coeffs)
            # q_k - q_{k-1} = p_k, so q_k is the running sum of p up to k
            run = 0
            for k in range(lo, hi + 1):
                run += coeffs.get(k, 0)
                if k < hi and run:
                    out[(g, k)] = run
            if run:
                raise ArithmeticError("not divisible by 1 - v")
        return ScalarPoly(self.n, out, _trusted=True)

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ScalarPoly.const(other, self.n)
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # evaluation and rendering
    def evaluate(self, v_value: complex, gamma_values: Mapping[int, complex]) -> complex:
        return scalar_evaluate(self, v_value, gamma_values)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def render(self, v_symbol: str | None = None) -> str:
        if not self.terms:
            return "0"
        sym = v_symbol or default_v_symbol(self.n)
        parts = []
        for i, ((g, ve), c) in enumerate(self.sorted_terms()):
            body = _term_body(g, ve, sym)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if body == "1":
                txt = str(mag)
            elif mag == 1:
                txt = body
            else:
                txt = f"{mag}*{body}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + txt)
            else:
                parts.append(f" {sign} {txt}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ScalarPoly(n={self.n}, {self.render()!r})"


def default_v_symbol(n: int) -> str:
    # at n = 1 the variable is conventionally written t
    return "t" if n == 1 else "v"


def _term_body(g: GExps, ve: int, sym: str) -> str:
    factors = []
    for a, e in enumerate(g, start=1):
        if e == 1:
            factors.append(f"g{a}")
        elif e:
            factors.append(f"g{a}^{e}")
    if ve == 1:
        factors.append(sym)
    elif ve:
        factors.append(f"{sym}^{ve}")
    return "*".join(factors) if factors else "1"


def scalar_mul(a: ScalarPoly, b: ScalarPoly) -> ScalarPoly:
    return a * b


def h_flat(a: int, n: int) -> ScalarPoly:
    if a % n:
        return ScalarPoly.zero(n)
    return ScalarPoly.const(1, n) - ScalarPoly.v_power(1, n)


def g_flat(a: int, n: int) -> ScalarPoly:
    rem = a % n
    if rem == 0:
        return ScalarPoly.v_power(1, n, -1)
    return ScalarPoly.gamma(rem, n)


def v_times_g(j: int, n: int) -> ScalarPoly:
    """v * g_j; the same element as g_flat(j, n)."""
    return g_flat(j, n)


def scalar_evaluate(s: ScalarPoly, v_value: complex, gamma_values: Mapping[int, complex]) -> complex:
    missing = [a for a in range(1, s.n) if a not in gamma_values]
    if missing:
        raise KeyError(f"missing gamma values for {missing}")
    total = 0j
    for (g, ve), c in s.terms.items():
        term = complex(c) * complex(v_value) ** ve
        for a, e in enumerate(g, start=1):
            if e:
                term *= complex(gamma_values[a]) ** e
        total += term
    return total
