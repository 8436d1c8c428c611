import json
from math import comb

import pytest

from metaplectic import coefficients
from metaplectic.laurent import LaurentPoly
from metaplectic.scalars import ScalarPoly
from metaplectic.verify import (
    check_branching,
    check_classic_tokuyama,
    check_F,
    check_little_f,
    check_longword_formulas,
    check_main,
    check_main_all_lengths,
    check_MN,
    check_tokuyama,
    crystal_side,
    crystal_sides,
    dominant_weights,
    gt_sum,
    operator_side,
    operator_sides,
    schur,
    schur_weyl_ratio,
    tokuyama_product,
)

M = LaurentPoly.monomial


class TestSides:
    def test_rank_one_example(self):
        want = "x2 + (1 - t)*x1 - t*x1^2*x2^-1"
        assert crystal_side((1, 0), 1, 1).render() == want
        assert operator_side((1, 0), 1, 1).render() == want

    def test_zero_length(self):
        for lam in [(0, 0, 0), (2, 1, 0), (3, 3, 1, 0)]:
            r = len(lam) - 1
            for n in (1, 2):
                assert operator_side(lam, 0, n) == M(lam[::-1], n)
                assert crystal_side(lam, 0, n) == M(lam[::-1], n)
        assert crystal_side((0, 0), 0, 1) == LaurentPoly.one(1, 1)

    @pytest.mark.parametrize("lam,l,n", [((1, 1, 0), 3, 2), ((2, 1, 0), 2, 3)])
    def test_examples_agree(self, lam, l, n):
        assert crystal_side(lam, l, n) == operator_side(lam, l, n)

    def test_batched_sides_match_single(self):
        lam, n = (2, 1, 0, 0), 2
        ops, crs = operator_sides(lam, n), crystal_sides(lam, n)
        for l in range(comb(4, 2) + 1):
            assert ops[l] == operator_side(lam, l, n)
            assert crs[l] == crystal_side(lam, l, n)

    def test_invalid_weight(self):
        with pytest.raises(ValueError):
            crystal_side((0, 1), 1, 1)
        with pytest.raises(ValueError):
            operator_side((1, -1), 1, 1)


class TestMain:
    def test_examples(self):
        assert check_main((1, 0), 1, 1).passed
        for n in (1, 2, 3):
            assert all(rep.passed for rep in check_main_all_lengths((0, 0), n))
            assert all(rep.passed for rep in check_main_all_lengths((0, 0, 0), n))

    def test_tokuyama_members(self):
        assert check_tokuyama((1, 1, 0), 2).passed
        assert check_tokuyama((2, 1, 1, 0), 1).passed

    def test_report_json(self):
        rec = check_main((1, 0), 1, 1).to_json()
        assert rec == {"statement": "main", "params": {"lam": [1, 0], "w_length": 1, "n": 1}, "passed": True}
        json.dumps(rec)

    def test_fault_injection_produces_difference(self, monkeypatch):
        original = coefficients.gt_coefficient

        def corrupted(p, n):
            c = original(p, n)
            return c + 1 if p.rows[-1] == (2,) else c

        monkeypatch.setattr(coefficients, "gt_coefficient", corrupted)
        rep = check_main((1, 0, 0), 3, 1)
        assert not rep.passed
        assert rep.difference is not None and not rep.difference.is_zero()
        assert "difference" in rep.render()


class TestClassical:
    def test_schur(self):
        assert schur((1, 0, 0)) == M((1, 0, 0), 1) + M((0, 1, 0), 1) + M((0, 0, 1), 1)
        assert schur((1, 1, 0)) == M((1, 1, 0), 1) + M((1, 0, 1), 1) + M((0, 1, 1), 1)
        assert len(schur((2, 1, 0))) == 7  # 8-dimensional, weight (1,1,1) twice

    @pytest.mark.parametrize("lam", dominant_weights(3, 3))
    def test_schur_dual_path(self, lam):
        assert schur(lam) == schur_weyl_ratio(lam)

    def test_rank_one_product(self):
        assert tokuyama_product(1) == M((0, 1), 1) - M((1, 0), 1, ScalarPoly.v_power(1, 1))

    @pytest.mark.parametrize("lam", [(0, 0), (1, 0, 0), (2, 1, 0)])
    def test_examples(self, lam):
        assert check_classic_tokuyama(lam).passed

    @pytest.mark.parametrize("lam", dominant_weights(2, 3) + dominant_weights(3, 2))
    def test_two_routes_agree(self, lam):
        r = len(lam) - 1
        shift = tuple(range(r + 1))
        full = crystal_side(lam, comb(r + 1, 2), 1)
        lifted = full.shift(shift)
        assert lifted == schur(lam) * tokuyama_product(r)
        top = tuple(a + b for a, b in zip(lam, range(r, -1, -1)))
        assert lifted == gt_sum(top, 1)


class TestMN:
    def test_base_case(self):
        assert check_MN("M", 1, 0, (1, 0), 1).passed
        assert check_MN("N", 2, 1, (1, 1, 0), 1).passed
        assert check_MN("N", 3, 2, (2, 1, 1, 0), 2).passed

    def test_non_effective(self):
        assert check_MN("M", 3, 1, (1, 0, -1, -2), 3).passed
        assert check_MN("N", 2, 0, (0, -1, -1), 2).passed

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_n_implies_m(self, r):
        for lam in dominant_weights(r, 2):
            for n in (1, 2):
                if check_MN("N", r, r - 1, lam, n).passed:
                    assert check_MN("M", r, r - 1, lam, n).passed

    def test_argument_checks(self):
        with pytest.raises(ValueError):
            check_MN("M", 2, 2, (1, 0, 0), 1)
        with pytest.raises(ValueError):
            check_MN("M", 2, 0, (1, 0), 1)
        with pytest.raises(ValueError):
            check_MN("Q", 1, 0, (1, 0), 1)

    def test_fault_injection(self, monkeypatch):
        original = coefficients.row_coefficient
        monkeypatch.setattr(coefficients, "row_coefficient", lambda row, n: original(row, n) + 1)
        assert not check_MN("M", 2, 1, (1, 0, 0), 1).passed


class TestFAndLittleF:
    @pytest.mark.parametrize("mu,a,n", [((2, 0), 1, 1), ((2, 1, 0), 2, 2), ((3, 1, 0), 1, 2), ((2, 2, 1, 0), 3, 3), ((2,), 1, 1)])
    def test_F(self, mu, a, n):
        assert check_F(mu, a, n).passed

    @pytest.mark.parametrize("args", [(2, 0, 2, 0, 2, 2), (2, 1, 3, 1, 2, 3), (3, 0, 0, 0, 3, 2), (1, 2, 1, 1, 1, 2)])
    def test_little_f(self, args):
        assert check_little_f(*args).passed


class TestLongWordAndBranching:
    def test_rank_one(self):
        assert check_longword_formulas(1, 1, 5).passed

    def test_rank_two(self):
        assert check_longword_formulas(2, 2, 20, seed=3).passed

    def test_branching_examples(self):
        from metaplectic.crystal import component_in_demazure, mu_components

        assert check_branching((1, 0, 0), 1).passed
        inside = [mu for mu, _ in mu_components((3, 1, 0)) if component_in_demazure((3, 1, 0), mu, 0)]
        assert len(inside) == 3
        assert check_branching((0, 0), 1).passed
        assert check_branching((1, 1, 0, 0), 2).passed
