from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metaplectic.scalars import (
    GaussMonomial,
    ScalarPoly,
    g_flat,
    gamma_canonicalize,
    h_flat,
    scalar_evaluate,
    scalar_mul,
    v_times_g,
)
from oracles import rewrite_normal_forms
from strategies import degrees, scalar_polys

V = lambda n, k=1: ScalarPoly.v_power(k, n)
G = ScalarPoly.gamma


class TestCanonicalize:
    def test_pair_collapses_to_v(self):
        assert gamma_canonicalize((1, 1), 3) == (GaussMonomial(3, (0, 0)), 1)

    def test_square_of_middle_symbol(self):
        assert gamma_canonicalize((2,), 2) == (GaussMonomial(2, (0,)), 1)

    def test_degree_four_mixed(self):
        assert gamma_canonicalize((2, 0, 1), 4) == (GaussMonomial(4, (1, 0, 0)), 1)

    def test_trivial_degree_one(self):
        assert gamma_canonicalize((), 1) == (GaussMonomial(1, ()), 0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            gamma_canonicalize((1,), 3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_confluent_against_exhaustive_rewriting(self, n):
        for raw in product(range(5), repeat=n - 1):
            if sum(raw) > 4:
                continue
            finals = rewrite_normal_forms(raw, n)
            assert len(finals) == 1, (raw, finals)
            mono, shift = gamma_canonicalize(raw, n)
            assert finals == {(mono.exps, shift)}

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_canonical_form_invariant(self, n):
        for raw in product(range(3), repeat=n - 1):
            mono, _ = gamma_canonicalize(raw, n)
            e = mono.exps
            for a in range(1, n):
                if a < n - a:
                    assert not (e[a - 1] and e[n - a - 1])
                if 2 * a == n:
                    assert e[a - 1] in (0, 1)


class TestProducts:
    def test_gamma_pair_is_v(self):
        assert scalar_mul(G(1, 3), G(2, 3)) == V(3)

    def test_identity(self):
        x = G(1, 3) + V(3, -2)
        assert x * 1 == x

    def test_mixed_product(self):
        one_minus_v = ScalarPoly.const(1, 3) - V(3)
        assert scalar_mul(one_minus_v * G(1, 3), G(2, 3) * V(3, -1)) == one_minus_v

    def test_mismatched_degree(self):
        with pytest.raises(ValueError):
            scalar_mul(G(1, 3), G(1, 2))

    @given(st.integers(2, 6), st.integers(-20, 20))
    def test_gflat_pair_gives_v(self, n, a):
        if a % n == 0:
            return
        assert g_flat(a, n) * g_flat(n - a, n) == V(n)


class TestGaussSymbols:
    @pytest.mark.parametrize("a,n,expected", [(3, 2, 0), (4, 2, "1-v"), (0, 1, "1-v")])
    def test_h_flat(self, a, n, expected):
        want = ScalarPoly.zero(n) if expected == 0 else ScalarPoly.const(1, n) - V(n)
        assert h_flat(a, n) == want

    @given(degrees, st.integers(-30, 30))
    def test_h_flat_has_no_gammas(self, n, a):
        assert all(not any(g) for g, _ in h_flat(a, n).terms)

    @pytest.mark.parametrize("a,n,expected", [(2, 1, "-v"), (1, 3, 1), (5, 3, 2)])
    def test_g_flat(self, a, n, expected):
        want = -V(n) if expected == "-v" else G(expected, n)
        assert g_flat(a, n) == want

    @pytest.mark.parametrize("j,n,expected", [(2, 2, "-v"), (1, 2, 1), (0, 1, "-v")])
    def test_v_times_g(self, j, n, expected):
        want = -V(n) if expected == "-v" else G(expected, n)
        assert v_times_g(j, n) == want


class TestEvaluate:
    def test_one_minus_v(self):
        assert scalar_evaluate(ScalarPoly.const(1, 2) - V(2), 0.2, {1: 0.5}) == pytest.approx(0.8)

    def test_zero(self):
        assert scalar_evaluate(ScalarPoly.zero(3), 0.3, {1: 1, 2: 2}) == 0

    def test_missing_gamma(self):
        with pytest.raises(KeyError):
            scalar_evaluate(G(1, 3), 0.1, {1: 1.0})

    def test_consistent_values_for_pair(self):
        from metaplectic.gauss import GaussContext, gamma_values

        ctx = GaussContext(7, 3)
        assert scalar_evaluate(G(1, 3) * G(2, 3), 1 / 7, gamma_values(ctx)) == pytest.approx(1 / 7, abs=1e-9)

    @given(st.data())
    def test_homomorphism_on_consistent_values(self, data):
        from metaplectic.gauss import GaussContext, gamma_values

        n, p = data.draw(st.sampled_from([(2, 5), (3, 7), (4, 17)]))
        vals = gamma_values(GaussContext(p, n))
        a, b = data.draw(scalar_polys(n)), data.draw(scalar_polys(n))
        lhs = scalar_evaluate(a * b, 1 / p, vals)
        rhs = scalar_evaluate(a, 1 / p, vals) * scalar_evaluate(b, 1 / p, vals)
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(rhs))


class TestRingAxioms:
    @given(st.data())
    def test_axioms(self, data):
        n = data.draw(degrees)
        a, b, c = (data.draw(scalar_polys(n)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert a - a == ScalarPoly.zero(n)

    @given(st.data())
    def test_no_zero_terms_and_canonical(self, data):
        n = data.draw(degrees)
        x = data.draw(scalar_polys(n)) * data.draw(scalar_polys(n))
        for (g, _), c in x.terms.items():
            assert c != 0
            assert gamma_canonicalize(g, n)[1] == 0

    @given(st.data())
    def test_one_minus_v_division_round_trip(self, data):
        n = data.draw(degrees)
        q = data.draw(scalar_polys(n))
        one_minus_v = ScalarPoly.const(1, n) - V(n)
        assert (q * one_minus_v).divide_one_minus_v() == q

    def test_division_rejects_non_multiple(self):
        with pytest.raises(ArithmeticError):
            ScalarPoly.const(1, 2).divide_one_minus_v()


class TestRendering:
    def test_order_by_v_exponent(self):
        x = ScalarPoly.const(1, 3) - V(3) + G(1, 3) * V(3, 2)
        assert x.render() == "1 - v + g1*v^2"

    def test_degree_one_uses_t(self):
        assert (V(1, 2) - V(1, 3)).render() == "t^2 - t^3"
