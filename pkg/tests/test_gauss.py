import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metaplectic.gauss import (
    GaussContext,
    check_gauss,
    gamma_values,
    gauss_gflat,
    gauss_hflat,
    gauss_hflat_sum,
    numeric_whittaker,
    primitive_root,
    residue_symbol,
    specialize_poly,
    specialize_scalar,
)
from metaplectic.laurent import LaurentPoly
from metaplectic.operators import whittaker_value
from metaplectic.scalars import ScalarPoly
from metaplectic.verify import crystal_side, operator_side
from strategies import laurent_polys

CASES = [(2, 5), (3, 7), (4, 17), (2, 13), (3, 13)]


class TestContext:
    def test_validation(self):
        with pytest.raises(ValueError):
            GaussContext(9, 2)
        with pytest.raises(ValueError):
            GaussContext(7, 2)
        with pytest.raises(ValueError):
            GaussContext(2, 1)
        assert GaussContext(5, 2).q == 5

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
    def test_primitive_root(self, p):
        g = primitive_root(p)
        assert len({pow(g, k, p) for k in range(p - 1)}) == p - 1


class TestResidue:
    def test_examples(self):
        ctx = GaussContext(5, 2)
        assert residue_symbol(1, ctx) == pytest.approx(1)
        assert residue_symbol(2, ctx) == pytest.approx(-1)
        assert residue_symbol(5, ctx) == 0

    @pytest.mark.parametrize("n,p", CASES)
    def test_euler_criterion(self, n, p):
        # chi(m) is the n-th root of unity whose index matches m^{(p-1)/n} mod p
        ctx = GaussContext(p, n)
        g = primitive_root(p)
        zeta_mod = pow(g, (p - 1) // n, p)
        for m in range(1, p):
            k = next(k for k in range(n) if pow(zeta_mod, k, p) == pow(m, (p - 1) // n, p))
            assert residue_symbol(m, ctx) == pytest.approx(cmath.exp(2j * math.pi * k / n))

    @pytest.mark.parametrize("n,p", CASES)
    def test_multiplicative(self, n, p):
        ctx = GaussContext(p, n)
        for a in range(1, p):
            for b in range(1, p):
                assert residue_symbol(a * b, ctx) == pytest.approx(residue_symbol(a, ctx) * residue_symbol(b, ctx))


class TestGaussSums:
    def test_values(self):
        ctx = GaussContext(5, 2)
        assert gauss_gflat(2, ctx) == pytest.approx(-0.2)
        assert gauss_gflat(1, ctx) == pytest.approx(math.sqrt(5) / 5)
        assert gauss_hflat(3, ctx) == 0
        assert gauss_hflat(4, ctx) == pytest.approx(0.8)
        assert gauss_hflat(0, GaussContext(7, 3)) == pytest.approx(6 / 7)

    @pytest.mark.parametrize("n,p", CASES)
    def test_relations(self, n, p):
        ctx = GaussContext(p, n)
        for a in range(1, n):
            assert abs(gauss_gflat(a, ctx) * gauss_gflat(n - a, ctx) - 1 / p) < 1e-9
            assert abs(abs(gauss_gflat(a, ctx)) - p**-0.5) < 1e-9
        for a in range(-n, 3 * n):
            expected = 1 - 1 / p if a % n == 0 else 0
            assert abs(gauss_hflat_sum(a, ctx) - expected) < 1e-9
            if a % n == 0:
                assert abs(gauss_gflat(a, ctx) + 1 / p) < 1e-9


class TestSpecialize:
    def test_scalar(self):
        ctx = GaussContext(5, 2)
        assert specialize_scalar(ScalarPoly.const(1, 2) - ScalarPoly.v_power(1, 2), ctx) == pytest.approx(0.8)

    def test_rejects_zero_x(self):
        with pytest.raises(ValueError):
            specialize_poly(LaurentPoly.one(1, 2), GaussContext(5, 2), [1, 0])
        with pytest.raises(ValueError):
            specialize_poly(LaurentPoly.one(1, 2), GaussContext(5, 2), [1])
        with pytest.raises(ValueError):
            specialize_poly(LaurentPoly.one(1, 3), GaussContext(5, 2), [1, 1])

    @given(st.data())
    def test_ring_homomorphism(self, data):
        n, p = data.draw(st.sampled_from(CASES))
        r = data.draw(st.integers(1, 2))
        ctx = GaussContext(p, n)
        x = [complex(data.draw(st.floats(0.5, 2)), data.draw(st.floats(-1, 1))) for _ in range(r + 1)]
        f, g = data.draw(laurent_polys(r, n)), data.draw(laurent_polys(r, n))
        lhs = specialize_poly(f * g, ctx, x)
        rhs = specialize_poly(f, ctx, x) * specialize_poly(g, ctx, x)
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(rhs))

    @pytest.mark.parametrize("n,p", [(2, 5), (3, 7), (4, 17)])
    def test_commuting_specialization(self, n, p):
        ctx = GaussContext(p, n)
        x = [1.3 + 0.2j, 0.7 - 0.4j, 1.1 + 0.5j]
        for lam in [(1, 0, 0), (2, 1, 0)]:
            sym = specialize_poly(whittaker_value(lam, n), ctx, x)
            assert abs(sym - numeric_whittaker(lam, ctx, x)) < 1e-9
        assert abs(specialize_poly(whittaker_value((1, 0), n), ctx, x[:2]) - numeric_whittaker((1, 0), ctx, x[:2])) < 1e-9

    def test_both_sides_of_main_instance(self):
        ctx = GaussContext(7, 3)
        x = [0.9 + 0.3j, 1.4 - 0.2j, 0.6 + 0.1j]
        a = specialize_poly(crystal_side((2, 1, 0), 2, 3), ctx, x)
        b = specialize_poly(operator_side((2, 1, 0), 2, 3), ctx, x)
        assert abs(a - b) < 1e-9

    @pytest.mark.parametrize("n,p", [(1, 3), (2, 5), (3, 7), (4, 17)])
    def test_check_gauss(self, n, p):
        assert check_gauss(n, p).passed

    def test_gamma_values_keys(self):
        assert set(gamma_values(GaussContext(17, 4))) == {1, 2, 3}
