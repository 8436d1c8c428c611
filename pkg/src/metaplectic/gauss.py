"""Numeric Gauss sums over F_p and specialization of symbolic results.

q is taken to be p itself.  The n-th power residue symbol is realized by
fixing a primitive root g of p and sending g^k to exp(2 pi i k / n).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Sequence

from .laurent import LaurentPoly
from .scalars import ScalarPoly

TOL = 1e-9


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def primitive_root(p: int) -> int:
    m = p - 1
    factors = {d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}
    for g in range(2, p):
        if all(pow(g, m // f, p) != 1 for f in factors):
            return g
    return 1  # p = 2


@dataclass(frozen=True)
class GaussContext:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"{self.p} is not an odd prime")
        if self.n < 1 or (self.p - 1) % (2 * self.n):
            raise ValueError(f"need p = 1 mod 2n, got p={self.p}, n={self.n}")

    @property
    def q(self) -> int:
        return self.p

    @cached_property
    def _dlog(self) -> Dict[int, int]:
        g = primitive_root(self.p)
        out, x = {}, 1
        for k in range(self.p - 1):
            out[x] = k
            x = x * g % self.p
        return out

    def psi(self, b: int) -> complex:
        return cmath.exp(2j * cmath.pi * b / self.p)


def residue_symbol(m: int, ctx: GaussContext) -> complex:
    m %= ctx.p
    if m == 0:
        return 0j
    k = ctx._dlog[m]
    return cmath.exp(2j * cmath.pi * k / ctx.n)


def residue_symbol_power(m: int, a: int, ctx: GaussContext) -> complex:
    """(m/p)^a computed on the discrete log, so exact roots of unity stay exact."""
    k = ctx._dlog[m % ctx.p]
    return cmath.exp(2j * cmath.pi * ((k * a) % ctx.n) / ctx.n)


def gauss_gflat(a: int, ctx: GaussContext) -> complex:
    total = sum(residue_symbol_power(b, a, ctx) * ctx.psi(b) for b in range(1, ctx.p))
    return total / ctx.q


def gauss_hflat_sum(a: int, ctx: GaussContext) -> complex:
    return sum(residue_symbol_power(b, a, ctx) for b in range(1, ctx.p)) / ctx.q


def gauss_hflat(a: int, ctx: GaussContext) -> float:
    """The case split value, checked against the character sum."""
    expected = 1 - 1 / ctx.q if a % ctx.n == 0 else 0.0
    summed = gauss_hflat_sum(a, ctx)
    if abs(summed - expected) > TOL:
        raise ArithmeticError(f"h-flat sum {summed} disagrees with {expected} at a={a}")
    return expected


def gamma_values(ctx: GaussContext) -> Dict[int, complex]:
    return {a: gauss_gflat(a, ctx) for a in range(1, ctx.n)}


def specialize_scalar(s: ScalarPoly, ctx: GaussContext) -> complex:
    if s.n != ctx.n:
        raise ValueError("scalar degree does not match the context")
    return s.evaluate(1 / ctx.q, gamma_values(ctx))


def specialize_poly(f: LaurentPoly, ctx: GaussContext, x_values: Sequence[complex]) -> complex:
    if f.n != ctx.n:
        raise ValueError("polynomial degree does not match the context")
    if len(x_values) != f.r + 1:
        raise ValueError("need one value per variable")
    if any(x == 0 for x in x_values):
        raise ValueError("x-values must be nonzero")
    gv = gamma_values(ctx)
    v = 1 / ctx.q
    total = 0j
    for e, c in f.terms.items():
        mono = 1 + 0j
        for x, k in zip(x_values, e):
            mono *= complex(x) ** k
        total += c.evaluate(v, gv) * mono
    return total


# Numeric Demazure-Lusztig pipeline.  Coefficients are complex numbers from the
# start, and T_i acts on x^lam through a closed form: with d = lam_{i+1} - lam_i,
# m = floor(d / n), Y = x^{n alpha_i} and G = g-flat(1 + d),
#     T_i x^lam = x^lam (G X^{d+1} + S(Y) - 1),
# where S = 1 + (1 - v) sum_{k=1}^{m} Y^k if m >= 0 and
#       S = v - (1 - v) sum_{k=m+1}^{-1} Y^k otherwise.

NumPoly = Dict[tuple, complex]


def _numeric_dl(i: int, f: NumPoly, n: int, v: float, gflat: Mapping[int, complex]) -> NumPoly:
    out: NumPoly = {}

    def add(e, c):
        out[e] = out.get(e, 0) + c

    for lam, c in f.items():
        a, b = i - 1, i
        d = lam[b] - lam[a]
        m = d // n

        def mono(step: int) -> tuple:
            e = list(lam)
            e[a] += step
            e[b] -= step
            return tuple(e)

        add(mono(d + 1), c * gflat[(1 + d) % n])
        if m >= 0:
            for k in range(1, m + 1):
                add(mono(n * k), c * (1 - v))
        else:
            add(lam, c * (v - 1))
            for k in range(m + 1, 0):
                add(mono(n * k), -c * (1 - v))
    return out


def numeric_whittaker(lam: Sequence[int], ctx: GaussContext, x_values: Sequence[complex]) -> complex:
    """sum over all w of T_w(x^{w0 lam}) with numeric coefficients, evaluated at x."""
    from .weyl import all_permutations, reduced_word

    n, v = ctx.n, 1 / ctx.q
    gflat = {a: (gauss_gflat(a, ctx) if a else -v) for a in range(n)}
    start: NumPoly = {tuple(lam[::-1]): 1 + 0j}
    total = 0j
    r = len(lam) - 1
    for w in all_permutations(r):
        f = start
        for i in reversed(reduced_word(w)):
            f = _numeric_dl(i, f, n, v, gflat)
        for e, c in f.items():
            mono = c
            for x, k in zip(x_values, e):
                mono *= complex(x) ** k
            total += mono
    return total


def gauss_table(ctx: GaussContext) -> list:
    rows = []
    for a in range(0, ctx.n + 1):
        rows.append((a, gauss_gflat(a, ctx), gauss_hflat(a, ctx)))
    return rows


def check_gauss(n: int, p: int, lambdas: Sequence[Sequence[int]] = ((1, 0), (2, 1, 0), (3, 1, 0)), seed: int = 0):
    """Gauss-sum identities plus agreement of symbolic-then-specialize with the numeric pipeline."""
    import random

    from .operators import whittaker_value
    from .verify import CheckReport

    ctx = GaussContext(p, n)
    problems = []
    v = 1 / ctx.q
    for a in range(0, 2 * n + 1):
        try:
            gauss_hflat(a, ctx)
        except ArithmeticError as exc:
            problems.append(str(exc))
        if a % n == 0 and abs(gauss_gflat(a, ctx) + v) > TOL:
            problems.append(f"g-flat({a}) != -v")
    for a in range(1, n):
        prod = gauss_gflat(a, ctx) * gauss_gflat(n - a, ctx)
        if abs(prod - v) > TOL:
            problems.append(f"g-flat({a}) g-flat({n - a}) = {prod}, expected v")
    rng = random.Random(seed)
    worst = 0.0
    for lam in lambdas:
        x = [complex(rng.uniform(0.5, 2), rng.uniform(-1, 1)) for _ in lam]
        diff = abs(specialize_poly(whittaker_value(lam, n), ctx, x) - numeric_whittaker(lam, ctx, x))
        worst = max(worst, diff)
        if diff > 1e-8:
            problems.append(f"specialization mismatch {diff:.3g} at {tuple(lam)}")
    return CheckReport(
        "gauss",
        {"n": n, "p": p},
        not problems,
        None,
        "; ".join(problems) if problems else f"max specialization gap {worst:.3g}",
    )
