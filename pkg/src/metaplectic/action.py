"""The metaplectic (Chinta-Gunnells) Weyl group action in type A.

With X = x_i / x_{i+1} the simple reflection s_i sends x^lam to

    s_i.x^lam * [X^{-r}(1 - v) + vg(1 + d) X^{1-n}(X^n - 1)] / (1 - v X^n)

where d = lam_{i+1} - lam_i, r = d mod n, vg = v_times_g and s_i.x^lam is
the plain swap.  In type A the quadratic form gives Q(alpha_i) = 1 and
B(alpha_i, lam) = lam_i - lam_{i+1}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .laurent import (
    BinomialFactor,
    Exps,
    LaurentPoly,
    RationalElement,
    _accumulate,
    normalized_factor,
)
from .scalars import ScalarPoly, v_times_g


def _check_index(i: int, r: int) -> None:
    if not 1 <= i <= r:
        raise IndexError(f"simple reflection index {i} out of range for rank {r}")


@lru_cache(maxsize=None)
def _sigma_numerator_monomial(i: int, lam: Exps, n: int) -> Tuple[Tuple[Exps, ScalarPoly], ...]:
    a, b = i - 1, i
    d = lam[b] - lam[a]
    rem = d % n
    g = v_times_g(1 + d, n)
    base = list(lam)
    base[a], base[b] = lam[b], lam[a]

    def at(k: int) -> Exps:
        e = list(base)
        e[a] += k
        e[b] -= k
        return tuple(e)

    one = ScalarPoly.const(1, n)
    out: Dict[Exps, ScalarPoly] = {}
    _accumulate(out, {at(-rem): one - ScalarPoly.v_power(1, n)})
    _accumulate(out, {at(1): g})
    _accumulate(out, {at(1 - n): -g})
    return tuple(out.items())


def sigma_numerator(i: int, f: LaurentPoly) -> LaurentPoly:
    """N with s_i(f) = N / (1 - v x^{n alpha_i})."""
    _check_index(i, f.r)
    out: Dict[Exps, ScalarPoly] = {}
    for lam, c in f.terms.items():
        contrib = _sigma_numerator_monomial(i, lam, f.n)
        if c.terms == {((0,) * (f.n - 1), 0): 1}:
            _accumulate(out, dict(contrib))
        else:
            _accumulate(out, {e: s * c for e, s in contrib})
    return LaurentPoly(f.r, f.n, out, _trusted=True)


def sigma_monomial(i: int, c: ScalarPoly, lam: Sequence[int], n: int) -> RationalElement:
    lam = tuple(lam)
    num = sigma_numerator(i, LaurentPoly.monomial(lam, n, c))
    return RationalElement(num, (BinomialFactor(i, i + 1, 1),))


def sigma_rational(i: int, f: RationalElement) -> RationalElement:
    r, n = f.r, f.n
    _check_index(i, r)

    def swap(a: int) -> int:
        return i + 1 if a == i else i if a == i + 1 else a

    num = sigma_numerator(i, f.num)
    den = [BinomialFactor(i, i + 1, 1)]
    for fac in f.den:
        new, mult = normalized_factor(swap(fac.i), swap(fac.j), fac.c_power, r, n)
        den.append(new)
        if mult.terms != LaurentPoly.one(r, n).terms:
            num = num * mult
    return RationalElement(num, den)


def act_word(word: Sequence[int], f: RationalElement) -> RationalElement:
    """w(f) for w = s_{i1} ... s_{il}; the rightmost letter acts first."""
    for i in reversed(tuple(word)):
        f = sigma_rational(i, f)
    return f
