"""Checkers that turn the identities of the theory into exact polynomial tests.

Every checker returns a CheckReport; a failing report carries the difference
polynomial so that the offending terms can be inspected directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import coefficients as coeffs
from .action import sigma_rational
from .crystal import (
    GTPattern,
    bzl_string,
    component_in_demazure,
    demazure_members,
    enumerate_patterns,
    gamma_of,
    lowest_vertex,
    mu_components,
    weight_of,
)
from .laurent import (
    BinomialFactor,
    LaurentPoly,
    NotDivisible,
    RationalElement,
    _accumulate,
    deformed_denominator,
    exact_divide_binomial,
    poly_sum,
    rat_eq,
    rat_to_poly,
)
from .operators import (
    DEMAZURE,
    DL,
    apply_op_word,
    bruhat_dl_sum,
    chinta_offen_sum,
    demazure_rational,
    dl_images,
    is_dominant,
)
from .scalars import ScalarPoly
from .weyl import (
    all_permutations,
    beginning_section,
    evaluate_word,
    favourite_long_word,
    long_element,
    lower_interval,
    sign,
)


@dataclass
class CheckReport:
    statement: str
    params: Dict[str, object]
    passed: bool
    difference: Optional[LaurentPoly] = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"statement": self.statement, "params": _jsonable(self.params), "passed": self.passed}
        if self.difference is not None and not self.passed:
            out["difference"] = self.difference.render()
        if self.detail:
            out["detail"] = self.detail
        return out

    def render(self) -> str:
        ps = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        line = f"{'PASS' if self.passed else 'FAIL'} {self.statement} {ps}"
        if not self.passed and self.difference is not None:
            line += f"\n  difference: {self.difference.render()}"
        if self.detail and not self.passed:
            line += f"\n  {self.detail}"
        return line


def _fmt(v) -> str:
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v))
    return str(v)


def _jsonable(params: Dict[str, object]) -> Dict[str, object]:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}


def _report(statement: str, params: dict, lhs: LaurentPoly, rhs: LaurentPoly) -> CheckReport:
    diff = lhs - rhs
    return CheckReport(statement, params, diff.is_zero(), diff)


def _validate(lam: Sequence[int], effective: bool = True) -> Tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) < 2:
        raise ValueError("weight must have at least two entries")
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    if effective and lam[-1] < 0:
        raise ValueError(f"weight {lam} is not effective")
    return lam


def rho(r: int) -> Tuple[int, ...]:
    return tuple(range(r, -1, -1))


def dominant_weights(r: int, max_entry: int, min_entry: int = 0) -> List[Tuple[int, ...]]:
    """Non-increasing tuples of length r+1 with entries in [min_entry, max_entry]."""
    out = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(min_entry, max_entry + 1), r + 1)]
    return sorted(out, reverse=True)


# ------------------------------------------------------------------ main identity


def _crystal_terms(top: Tuple[int, ...], n: int):
    """(last nonzero BZL position, coefficient, weight) per vertex with nonzero coefficient."""
    out = []
    for p in enumerate_patterns(top):
        c = coeffs.gt_coefficient(p, n)
        if not c:
            continue
        b = bzl_string(gamma_of(p))
        last = max((i + 1 for i, x in enumerate(b) if x), default=0)
        out.append((last, c, weight_of(p)))
    return out


def crystal_sides(lam: Sequence[int], n: int) -> Dict[int, LaurentPoly]:
    """crystal_side for every w_length at once."""
    lam = _validate(lam)
    r = len(lam) - 1
    top = tuple(a + b for a, b in zip(lam, rho(r)))
    shift = tuple(-k for k in range(r + 1))  # x^{-w0 rho}
    terms = _crystal_terms(top, n)
    out = {}
    for l in range(comb(r + 1, 2) + 1):
        acc = {}
        for last, c, wt in terms:
            if last <= l:
                _accumulate(acc, {tuple(a + s for a, s in zip(wt, shift)): c})
        out[l] = LaurentPoly(r, n, acc, _trusted=True)
    return out


def crystal_side(lam: Sequence[int], w_length: int, n: int) -> LaurentPoly:
    lam = _validate(lam)
    r = len(lam) - 1
    top = tuple(a + b for a, b in zip(lam, rho(r)))
    acc = {}
    for p in demazure_members(top, w_length):
        c = coeffs.gt_coefficient(p, n)
        if c:
            _accumulate(acc, {tuple(a - k for k, a in enumerate(weight_of(p))): c})
    return LaurentPoly(r, n, acc, _trusted=True)


def operator_sides(lam: Sequence[int], n: int) -> Dict[int, LaurentPoly]:
    """operator_side for every w_length, sharing the T_u images."""
    lam = _validate(lam)
    r = len(lam) - 1
    f = LaurentPoly.monomial(lam[::-1], n)
    images = dl_images(f, all_permutations(r))
    out = {}
    for l in range(comb(r + 1, 2) + 1):
        w = evaluate_word(beginning_section(r, l), r)
        out[l] = poly_sum((images[u] for u in lower_interval(w)), r, n)
    return out


def operator_side(lam: Sequence[int], w_length: int, n: int) -> LaurentPoly:
    lam = _validate(lam)
    r = len(lam) - 1
    w = evaluate_word(beginning_section(r, w_length), r)
    return bruhat_dl_sum(w, LaurentPoly.monomial(lam[::-1], n))


def _embed_top_variable(f: LaurentPoly, extra: int) -> LaurentPoly:
    """A polynomial in x_1..x_m viewed in x_1..x_{m+1}, times x_{m+1}^extra."""
    return LaurentPoly(f.r + 1, f.n, {e + (extra,): c for e, c in f.terms.items()}, _trusted=True)


def _reduced_sides(lam: Tuple[int, ...], w_length: int, n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """Both sides through the rank r-1 instance for lam[1:], multiplied by x_{r+1}^{lam_1}."""
    sub = lam[1:]
    return (
        _embed_top_variable(operator_side(sub, w_length, n), lam[0]),
        _embed_top_variable(crystal_side(sub, w_length, n), lam[0]),
    )


def _main_report(lam, l, n, op: LaurentPoly, cr: LaurentPoly, statement="main") -> CheckReport:
    r = len(lam) - 1
    rep = _report(statement, {"lam": lam, "w_length": l, "n": n}, op, cr)
    if rep.passed and r >= 2 and l <= comb(r, 2):
        op_red, cr_red = _reduced_sides(lam, l, n)
        if op_red != op or cr_red != cr:
            rep.passed = False
            rep.difference = (op_red - op) if op_red != op else (cr_red - cr)
            rep.detail = "rank-reduced instance disagrees with the direct computation"
    return rep


def check_main(lam: Sequence[int], w_length: int, n: int) -> CheckReport:
    lam = _validate(lam)
    return _main_report(lam, w_length, n, operator_side(lam, w_length, n), crystal_side(lam, w_length, n))


def check_main_all_lengths(lam: Sequence[int], n: int) -> List[CheckReport]:
    lam = _validate(lam)
    ops, crs = operator_sides(lam, n), crystal_sides(lam, n)
    return [_main_report(lam, l, n, ops[l], crs[l]) for l in sorted(ops)]


def check_tokuyama(lam: Sequence[int], n: int) -> CheckReport:
    lam = _validate(lam)
    r = len(lam) - 1
    full = comb(r + 1, 2)
    rep = _main_report(lam, full, n, operator_side(lam, full, n), crystal_side(lam, full, n), "tokuyama")
    return rep


# ---------------------------------------------------------- classical Tokuyama


def schur(lam: Sequence[int], r: Optional[int] = None) -> LaurentPoly:
    lam = _validate(lam)
    if r is not None and r != len(lam) - 1:
        raise ValueError("rank does not match the weight length")
    acc = {}
    one = ScalarPoly.const(1, 1)
    for p in enumerate_patterns(lam):
        _accumulate(acc, {weight_of(p): one})
    return LaurentPoly(len(lam) - 1, 1, acc, _trusted=True)


def schur_weyl_ratio(lam: Sequence[int]) -> LaurentPoly:
    """Alternant of lam + rho divided by the Vandermonde product, by exact division."""
    lam = _validate(lam)
    r = len(lam) - 1
    top = tuple(a + b for a, b in zip(lam, rho(r)))
    acc = {}
    for w in all_permutations(r):
        e = [0] * (r + 1)
        for a, img in enumerate(w):
            e[img - 1] = top[a]
        _accumulate(acc, {tuple(e): ScalarPoly.const(sign(w), 1)})
    q = LaurentPoly(r, 1, acc, _trusted=True)
    for i in range(1, r + 2):
        for j in range(i + 1, r + 2):
            # x_i - x_j = -x_j (1 - x_i / x_j)
            e = [0] * (r + 1)
            e[j - 1] = -1
            q = exact_divide_binomial(q.shift(e, -1), BinomialFactor(i, j, 0))
    return q


def tokuyama_product(r: int) -> LaurentPoly:
    """prod_{i<j} (x_j - t x_i) at n = 1."""
    out = LaurentPoly.one(r, 1)
    for i in range(1, r + 2):
        for j in range(i + 1, r + 2):
            ei = [0] * (r + 1)
            ei[i - 1] = 1
            ej = [0] * (r + 1)
            ej[j - 1] = 1
            out = out * (LaurentPoly.monomial(ej, 1) - LaurentPoly.monomial(ei, 1, ScalarPoly.v_power(1, 1)))
    return out


def gt_sum(top: Sequence[int], n: int) -> LaurentPoly:
    acc = {}
    for p in enumerate_patterns(top):
        c = coeffs.gt_coefficient(p, n)
        if c:
            _accumulate(acc, {weight_of(p): c})
    return LaurentPoly(len(top) - 1, n, acc, _trusted=True)


def check_classic_tokuyama(lam: Sequence[int]) -> CheckReport:
    lam = _validate(lam)
    r = len(lam) - 1
    s = schur(lam)
    params = {"lam": lam, "n": 1}
    if s != schur_weyl_ratio(lam):
        return CheckReport("classic", params, False, s - schur_weyl_ratio(lam), "Schur polynomial paths disagree")
    top = tuple(a + b for a, b in zip(lam, rho(r)))
    return _report("classic", params, s * tokuyama_product(r), gt_sum(top, 1))


# ------------------------------------------------------------------ M and N


def _annihilator(r: int):
    word = favourite_long_word(r - 1) if r >= 2 else ()
    return lambda f: apply_op_word(word, f, DEMAZURE)


def mn_sides(kind: str, r: int, k: int, lam: Tuple[int, ...], n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    f = LaurentPoly.monomial(lam[::-1], n)
    strings = [tuple(range(r, r - j - 1, -1)) for j in range(k + 1)]
    if kind == "M":
        lhs = poly_sum([f] + [apply_op_word(s, f, DL) for s in strings], r, n)
        rhs = coeffs.admissible_row_sum(lam, n, k)
    elif kind == "N":
        lhs = apply_op_word(strings[-1], f, DL)
        rhs = coeffs.admissible_row_sum(lam, n, k, nonzero_at=k + 1)
    else:
        raise ValueError(f"unknown statement kind {kind!r}")
    return lhs, rhs


def check_MN(kind: str, r: int, k: int, lam: Sequence[int], n: int) -> CheckReport:
    lam = _validate(lam, effective=False)
    if len(lam) != r + 1:
        raise ValueError("weight length must be r + 1")
    if not 0 <= k < r:
        raise ValueError("need 0 <= k < r")
    params = {"kind": kind, "r": r, "k": k, "lam": lam, "n": n}
    shift = max(0, -lam[-1])
    kappa = tuple(x + shift for x in lam)
    lhs, rhs = mn_sides(kind, r, k, kappa, n)
    image = _annihilator(r)(lhs - rhs).num
    if shift:
        image = image.shift((-shift,) * (r + 1))
    return CheckReport(f"{kind}_{r},{k}", params, image.is_zero(), image)


# ------------------------------------------------------------- F and little f


def check_F(mu: Sequence[int], a: int, n: int) -> CheckReport:
    mu = tuple(mu)
    F = coeffs.big_F(mu, a, n)
    m = len(mu)
    image = apply_op_word(favourite_long_word(m - 1), F, DEMAZURE).num if m >= 2 else F
    return CheckReport("F", {"mu": mu, "a": a, "n": n}, image.is_zero(), image)


def p_ku_closed_form(k: int, u: int, n: int, r: int) -> RationalElement:
    """((x^{n alpha} - v) x_r^m - N) / (1 - x^{n alpha}), where s(x_r^m) = N / (1 - v x^{n alpha})."""
    from .action import sigma_numerator

    m = n * k + u + n - 1
    e = [0] * r
    e[r - 1] = m
    mono = LaurentPoly.monomial(e, n)
    y = [0] * r
    y[r - 2], y[r - 1] = n, -n
    num = mono.shift(y) - mono.scale(ScalarPoly.v_power(1, n)) - sigma_numerator(r - 1, mono)
    return RationalElement(num, (BinomialFactor(r - 1, r, 0),))


def check_little_f(a: int, gamma13: int, lam2: int, lam3: int, n: int, r: int) -> CheckReport:
    params = {"a": a, "gamma13": gamma13, "lam2": lam2, "lam3": lam3, "n": n, "r": r}
    f = coeffs.little_f(a, gamma13, lam2, lam3, n, r)
    image = demazure_rational(r - 1, f).num
    if not image.is_zero():
        return CheckReport("little_f", params, False, image, "D_{r-1} f is nonzero")
    top = gamma13 + lam2 - lam3 + 1
    if top > a:
        rec = coeffs.p_ku(a, gamma13, lam2, lam3, n, r)
        P = RationalElement.of(rec.poly)
        if not rat_eq(sigma_rational(r - 1, P), P):
            return CheckReport("little_f", params, False, rec.poly, "P_{k,u} is not invariant")
        if not rat_eq(P, p_ku_closed_form(rec.k, rec.u, n, r)):
            return CheckReport("little_f", params, False, rec.poly, "P_{k,u} differs from its closed form")
    return CheckReport("little_f", params, True, image)


# --------------------------------------------------------------- long words


def random_monomial(rng: random.Random, r: int, lo: int = -2, hi: int = 3) -> Tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(r + 1))


def check_longword_formulas(r: int, n: int, sample_count: int, seed: int = 0, lo: int = -2, hi: int = 3) -> CheckReport:
    rng = random.Random(seed)
    w0 = favourite_long_word(r)
    delta_v = deformed_denominator(r, n, True)
    delta = deformed_denominator(r, n, False)
    delta_factors = [BinomialFactor(i, j, 0) for i in range(1, r + 2) for j in range(i + 1, r + 2)]
    params = {"r": r, "n": n, "samples": sample_count, "seed": seed}
    for _ in range(sample_count):
        lam = random_monomial(rng, r, lo, hi)
        f = LaurentPoly.monomial(lam, n)
        d_w0 = apply_op_word(w0, f, DEMAZURE)
        rhs36 = bruhat_dl_sum(long_element(r), f)
        try:
            lhs36 = rat_to_poly(RationalElement(delta_v * d_w0.num, d_w0.den))
        except NotDivisible:
            return CheckReport("longword", params, False, None, f"deformed denominator times D_w0 is not polynomial at {lam}")
        if lhs36 != rhs36:
            return CheckReport("longword", params, False, lhs36 - rhs36, f"deformed denominator identity fails at {lam}")
        s = chinta_offen_sum(f)
        if not rat_eq(RationalElement(s.num, list(s.den) + delta_factors), d_w0):
            return CheckReport("longword", params, False, None, f"long-word Demazure formula fails at {lam}")
        if not rat_eq(s, RationalElement(delta * d_w0.num, d_w0.den)):
            return CheckReport("longword", params, False, None, f"j(w, x) identity fails at {lam}")
    return CheckReport("longword", params, True)


# ---------------------------------------------------------------- branching


def check_branching(lam: Sequence[int], n: int) -> CheckReport:
    lam = _validate(lam)
    r = len(lam) - 1
    top = tuple(a + b for a, b in zip(lam, rho(r)))
    params = {"lam": lam, "n": n}
    d_top = sum(top)
    sides = crystal_sides(lam, n)
    for l in range(comb(r, 2), comb(r + 1, 2) + 1):
        k = l - comb(r, 2) - 1
        acc = {}
        for mu, verts in mu_components(top):
            if not component_in_demazure(top, mu, k):
                continue
            c_low = coeffs.gt_coefficient(lowest_vertex(top, mu), n)
            if not c_low:
                continue
            xe = d_top - sum(mu) - r
            for p in verts:
                sub = p.without_top()
                c = coeffs.gt_coefficient(sub, n) * c_low
                if c:
                    wt = weight_of(sub)
                    e = tuple(wt[t] - t for t in range(r)) + (xe,)
                    _accumulate(acc, {e: c})
        rhs = LaurentPoly(r, n, acc, _trusted=True)
        if rhs != sides[l]:
            return CheckReport("branching", {**params, "w_length": l}, False, sides[l] - rhs)
    return CheckReport("branching", params, True)
