"""Metaplectic Demazure and Demazure-Lusztig operators.

With Y = x^{n alpha_i}:

    D_i f = (f - Y s_i(f)) / (1 - Y)
    T_i f = (1 - v Y) D_i f - f

Both are computed monomial by monomial and cached, since every sweep applies
them to heavily overlapping sets of monomials.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .action import _check_index, act_word, sigma_numerator, sigma_rational
from .laurent import (
    BinomialFactor,
    Exps,
    LaurentPoly,
    NotDivisible,
    RationalElement,
    _accumulate,
    exact_divide_binomial,
    rat_add,
    rat_sum,
)
from .scalars import ScalarPoly
from .weyl import (
    Permutation,
    all_permutations,
    compose,
    evaluate_word,
    inverse,
    inversion_set_phi,
    long_element,
    lower_interval,
    reduced_word,
    sign,
)

DEMAZURE = "demazure"
DL = "dl"


class InternalNonPolynomial(RuntimeError):
    """A division that must be exact was not; this signals a bug."""


class NonPolynomialResult(ArithmeticError):
    """A Demazure image is a genuine rational function (possible once n > 1)."""


def _root_monomial(i: int, r: int, n: int) -> Exps:
    e = [0] * (r + 1)
    e[i - 1] = n
    e[i] = -n
    return tuple(e)


@lru_cache(maxsize=None)
def _quotient_monomial(i: int, lam: Exps, n: int) -> LaurentPoly:
    """((1 - vY) x^lam - Y N) / (1 - Y) where s_i(x^lam) = N / (1 - vY)."""
    r = len(lam) - 1
    f = LaurentPoly.monomial(lam, n)
    y = _root_monomial(i, r, n)
    num = f - f.shift(y, ScalarPoly.v_power(1, n)) - sigma_numerator(i, f).shift(y)
    try:
        return exact_divide_binomial(num, BinomialFactor(i, i + 1, 0))
    except NotDivisible as exc:
        raise InternalNonPolynomial(f"division failed for i={i}, lam={lam}, n={n}") from exc


@lru_cache(maxsize=None)
def _dl_monomial(i: int, lam: Exps, n: int) -> Tuple[Tuple[Exps, ScalarPoly], ...]:
    q = dict(_quotient_monomial(i, lam, n).terms)
    _accumulate(q, {lam: ScalarPoly.const(-1, n)})
    return tuple(q.items())


def _apply(f: LaurentPoly, mono: Callable[[int, Exps, int], Tuple], i: int) -> LaurentPoly:
    _check_index(i, f.r)
    unit = ((0,) * (f.n - 1), 0)
    out: Dict[Exps, ScalarPoly] = {}
    for lam, c in f.terms.items():
        img = mono(i, lam, f.n)
        if len(c.terms) == 1 and unit in c.terms and c.terms[unit] == 1:
            _accumulate(out, dict(img))
        else:
            _accumulate(out, {e: s * c for e, s in img})
    return LaurentPoly(f.r, f.n, out, _trusted=True)


def _quotient(i: int, f: LaurentPoly) -> LaurentPoly:
    return _apply(f, lambda i_, lam, n: tuple(_quotient_monomial(i_, lam, n).terms.items()), i)


def simplify(F: RationalElement) -> RationalElement:
    """Cancel every denominator factor that divides the numerator exactly."""
    num = F.num
    if num.is_zero():
        return RationalElement(num, ())
    kept = []
    for fac in F.den:
        try:
            num = exact_divide_binomial(num, fac)
        except NotDivisible:
            kept.append(fac)
    return RationalElement(num, kept)


def demazure_rational(i: int, F: RationalElement | LaurentPoly) -> RationalElement:
    """D_i on a rational element; polynomial inputs take a cached fast path."""
    if isinstance(F, LaurentPoly):
        F = RationalElement.of(F)
    r, n = F.r, F.n
    _check_index(i, r)
    if not F.den:
        return simplify(RationalElement(_quotient(i, F.num), (BinomialFactor(i, i + 1, 1),)))
    sig = sigma_rational(i, F)
    moved = RationalElement(-sig.num.shift(_root_monomial(i, r, n)), sig.den)
    diff = rat_add(F, moved)
    return simplify(RationalElement(diff.num, list(diff.den) + [BinomialFactor(i, i + 1, 0)]))


def demazure(i: int, f: LaurentPoly) -> LaurentPoly:
    """D_i f as a polynomial; raises NonPolynomialResult when it is not one."""
    res = demazure_rational(i, f)
    if res.den:
        raise NonPolynomialResult(f"D_{i} of this input has denominator {res.den}")
    return res.num


def demazure_lusztig(i: int, f: LaurentPoly) -> LaurentPoly:
    return _apply(f, _dl_monomial, i)


def apply_op_word(word: Sequence[int], f: LaurentPoly, kind: str = DL):
    """Apply O_{i1} ... O_{il}; the rightmost operator acts first.

    Demazure-Lusztig words return a LaurentPoly.  Demazure words return a
    simplified RationalElement, whose denominator is empty when the image is
    a polynomial.
    """
    if kind == DL:
        for i in reversed(tuple(word)):
            f = demazure_lusztig(i, f)
        return f
    if kind != DEMAZURE:
        raise ValueError(f"unknown operator kind {kind!r}")
    F = f if isinstance(f, RationalElement) else RationalElement.of(f)
    for i in reversed(tuple(word)):
        F = demazure_rational(i, F)
    return F


def dl_images(f: LaurentPoly, perms: Iterable[Permutation]) -> Dict[Permutation, LaurentPoly]:
    """T_u(f) for each u, sharing work along greedy reduced words."""
    memo: Dict[Permutation, LaurentPoly] = {tuple(range(1, f.r + 2)): f}

    def get(u: Permutation) -> LaurentPoly:
        # iterative to keep recursion shallow
        chain: List[Tuple[Permutation, int]] = []
        cur = u
        while cur not in memo:
            d = reduced_word(cur)[0]
            chain.append((cur, d))
            cur = tuple(d + 1 if x == d else d if x == d + 1 else x for x in cur)
        val = memo[cur]
        for p, d in reversed(chain):
            val = demazure_lusztig(d, val)
            memo[p] = val
        return val

    return {u: get(u) for u in perms}


def bruhat_dl_sum(w: Permutation, f: LaurentPoly) -> LaurentPoly:
    out: Dict[Exps, ScalarPoly] = {}
    for img in dl_images(f, lower_interval(w)).values():
        _accumulate(out, img.terms)
    return LaurentPoly(f.r, f.n, out, _trusted=True)


def chinta_offen_j(w: Permutation, r: int, n: int) -> LaurentPoly:
    e = [0] * (r + 1)
    for i, j in inversion_set_phi(inverse(w)):
        e[i - 1] += n
        e[j - 1] -= n
    return LaurentPoly.monomial(e, n, sign(w))


def longword_demazure_formula(f: LaurentPoly) -> RationalElement:
    """(1/Delta) sum_w sgn(w) prod_{Phi(w^-1)} x^{n alpha} w(f), with the metaplectic w."""
    r, n = f.r, f.n
    terms = []
    for w in all_permutations(r):
        wf = act_word(reduced_word(w), RationalElement.of(f))
        terms.append(wf.mul_poly(chinta_offen_j(w, r, n)))
    total = rat_sum(terms, r, n)
    delta = [BinomialFactor(i, j, 0) for i in range(1, r + 2) for j in range(i + 1, r + 2)]
    return RationalElement(total.num, list(total.den) + delta)


def chinta_offen_sum(f: LaurentPoly) -> RationalElement:
    """sum_w j(w, x) w(f) with the metaplectic action."""
    r, n = f.r, f.n
    return rat_sum(
        (act_word(reduced_word(w), RationalElement.of(f)).mul_poly(chinta_offen_j(w, r, n)) for w in all_permutations(r)),
        r,
        n,
    )


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[k] >= lam[k + 1] for k in range(len(lam) - 1))


def whittaker_value(lam: Sequence[int], n: int) -> LaurentPoly:
    lam = tuple(int(x) for x in lam)
    if len(lam) < 2 or not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant of rank >= 1")
    r = len(lam) - 1
    return bruhat_dl_sum(long_element(r), LaurentPoly.monomial(lam[::-1], n))


def clear_caches() -> None:
    for fn in (_quotient_monomial, _dl_monomial):
        fn.cache_clear()
