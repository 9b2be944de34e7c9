"""Exact arithmetic kernel: polynomials, fractions, series, roots."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nazeta.algebra import (
    Poly,
    RationalFunction,
    SubstRule,
    poly_complex_roots,
    poly_gcd,
    series_exp,
    series_log_coefficients,
    substitute,
)
from nazeta.errors import DomainError
from nazeta.multivar import LaurentPoly, MultiRationalFunction

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)


def small_polys(max_deg=3, nonzero=False):
    base = st.lists(rationals, min_size=1, max_size=max_deg + 1).map(
        Poly.from_list
    )
    if nonzero:
        return base.filter(lambda p: not p.is_zero())
    return base


class TestPoly:
    def test_zero_handling(self):
        assert Poly.of(0, 0).is_zero()
        assert Poly.of(1, 0).degree == 0

    def test_divmod_exact(self):
        a = Poly.of(1, -1) * Poly.of(2, 0, 1) + Poly.of(5)
        q, r = a.divmod(Poly.of(1, -1))
        assert q == Poly.of(2, 0, 1)
        assert r == Poly.of(5)

    def test_shift_is_taylor(self):
        p = Poly.of(1, 2, 3, 4)
        sh = p.shift(F(1, 2))
        for x in (F(0), F(1), F(-2, 3)):
            assert sh.evaluate(x) == p.evaluate(x + F(1, 2))

    def test_gcd_common_factor(self):
        g = Poly.of(-1, 0, 1)
        a = g * Poly.of(2, 3)
        b = g * Poly.of(1, 1, 5)
        assert poly_gcd(a, b) == g.scale(1 / g.leading())


class TestRationalFunction:
    def test_reduction_and_canonical_eq(self):
        f = RationalFunction.make(Poly.of(-1, 0, 1), Poly.of(1, 1), "u")
        assert f == RationalFunction.from_poly(Poly.of(-1, 1), "u")

    @settings(max_examples=60, deadline=None)
    @given(small_polys(nonzero=True), small_polys(nonzero=True), small_polys(nonzero=True))
    def test_canonical_form_product_quotient(self, a, b, d):
        # reduce(f*g)/reduce(g) = reduce(f) exactly
        f = RationalFunction.make(a, d, "u")
        g = RationalFunction.make(b, Poly.of(1, 2), "u")
        assert (f * g) / g == f

    def test_series_of_geometric(self):
        f = RationalFunction.make(Poly.one(), Poly.of(1, -1), "T")
        assert f.series(4) == [F(1)] * 5


class TestSubstitution:
    def test_reciprocal_example(self):
        f = RationalFunction.make(Poly.one(), Poly.of(1, -1), "u")
        g = substitute(f, SubstRule.reciprocal(1))
        assert g == RationalFunction.make(Poly.of(0, -1), Poly.of(1, -1), "u")

    def test_scaled_reciprocal(self):
        g = substitute(RationalFunction.variable("u"), SubstRule.reciprocal(4))
        assert g == RationalFunction.make(Poly.of(4), Poly.of(0, 1), "u")

    @settings(max_examples=40, deadline=None)
    @given(small_polys(nonzero=True), small_polys(nonzero=True))
    def test_reciprocal_is_involution(self, a, b):
        f = RationalFunction.make(a, b, "u")
        c = F(9, 2)
        g = substitute(substitute(f, SubstRule.reciprocal(c)), SubstRule.reciprocal(c))
        assert g == f

    def test_power_substitution(self):
        f = RationalFunction.make(Poly.of(1, 1), Poly.of(1, -1), "T")
        g = substitute(f, SubstRule.power(1, 2, "t"))
        assert g == RationalFunction.make(Poly.of(1, 0, 1), Poly.of(1, 0, -1), "t")

    def test_substitutions_compose(self):
        f = RationalFunction.make(Poly.of(1, 2, 1), Poly.of(3, 0, 1), "u")
        one_step = substitute(f, SubstRule.scaling(F(3, 2)))
        two_step = substitute(
            substitute(f, SubstRule.scaling(3)), SubstRule.scaling(F(1, 2))
        )
        assert one_step == two_step

    def test_zero_constant_rejected(self):
        with pytest.raises(DomainError):
            substitute(RationalFunction.variable("u"), SubstRule.scaling(0))


class TestLogSeries:
    def test_geometric_coefficients(self):
        f = RationalFunction.make(Poly.one(), Poly.of(1, -1), "T")
        cs = series_log_coefficients(f, 3)
        assert cs == [F(1), F(1, 2), F(1, 3)]
        assert [m * c for m, c in zip((1, 2, 3), cs)] == [1, 1, 1]

    def test_round_trip(self):
        f = RationalFunction.make(Poly.of(1, 1), Poly.of(1, -1), "T")
        cs = series_log_coefficients(f, 6)
        assert series_exp(cs, 6) == f.series(6)

    def test_point_counts_match_newton_identities(self):
        # rank-one zeta of the q=2, N=3 curve: counts from power sums
        num = Poly.of(1, 0, 2)
        f = RationalFunction.make(num, Poly.of(1, -1) * Poly.of(1, -2), "T")
        cs = series_log_coefficients(f, 5)
        # Newton identities for power sums of the inverse roots of num:
        # p_k + a_1 p_{k-1} + ... + k a_k = 0 with num = 1 + a_1 T + a_2 T^2
        a = [num[i] for i in range(3)]
        power_sums = []
        for k in range(1, 6):
            acc = -k * (a[k] if k < 3 else 0)
            for j in range(1, min(k, 2) + 1):
                acc -= a[j] * (power_sums[k - j - 1] if k - j >= 1 else 0)
            power_sums.append(acc)
        for m in range(1, 6):
            assert m * cs[m - 1] == 1 + 2**m - power_sums[m - 1]

    def test_requires_unit_constant(self):
        f = RationalFunction.make(Poly.of(2, 1), Poly.of(1, -1), "T")
        with pytest.raises(DomainError):
            series_log_coefficients(f, 3)


class TestComplexRoots:
    def test_factored_quadratic(self):
        roots = poly_complex_roots(Poly.of(-1, 0, 1))
        values = sorted(z.real for z, _ in roots)
        assert abs(values[0] + 1) < 1e-9 and abs(values[1] - 1) < 1e-9

    def test_conjugate_pair_modulus(self):
        roots = poly_complex_roots(Poly.of(1, 1, 4))
        assert len(roots) == 2
        assert all(abs(abs(z) - 0.5) < 1e-9 for z, _ in roots)
        assert roots[0][0].conjugate() == roots[1][0]

    def test_two_rational_roots(self):
        roots = poly_complex_roots(Poly.of(1, -2) * Poly.of(1, -3))
        values = sorted(z.real for z, _ in roots)
        assert abs(values[0] - 1 / 3) < 1e-9 and abs(values[1] - 1 / 2) < 1e-9

    def test_multiplicity(self):
        roots = poly_complex_roots(Poly.of(1, -2) ** 2)
        assert len(roots) == 1 and roots[0][1] == 2

    def test_residual_bound(self):
        for coeffs in ((3, 0, -2, 1), (1, 1, 1, 1, 1), (-5, 0, 0, 0, 2)):
            p = Poly.of(*coeffs)
            for z, _ in poly_complex_roots(p, tol=1e-9):
                scale = sum(
                    abs(float(c)) * abs(z) ** i for i, c in enumerate(p.coeffs)
                )
                assert abs(p.evaluate_complex(z)) <= 1e-9 * max(scale, 1e-300)

    def test_degree_sum(self):
        p = Poly.of(2, 0, 0, 1, 5, 1)
        assert sum(m for _, m in poly_complex_roots(p)) == p.degree

    def test_zero_poly_rejected(self):
        with pytest.raises(DomainError):
            poly_complex_roots(Poly.zero())


class TestMultivariate:
    def test_specialization_matches_univariate(self):
        # (1 + u1 u2)/(1 - u2) specialized at u1 = 3 equals the direct build
        one = LaurentPoly.const(2, 1)
        u1 = LaurentPoly.var(2, 0)
        u2 = LaurentPoly.var(2, 1)
        f = MultiRationalFunction.make(one + u1 * u2, one - u2)
        spec = f.eval_var(0, 3).to_univariate(1, "u")
        direct = RationalFunction.make(Poly.of(1, 3), Poly.of(1, -1), "u")
        assert spec == direct

    def test_monomial_content_removed(self):
        u1 = LaurentPoly.var(2, 0)
        f = MultiRationalFunction.make(
            u1.mul_monomial((2, 1)), u1.mul_monomial((1, 1))
        )
        lo_n = f.num.degree_in(0)[0]
        lo_d = f.den.degree_in(0)[0]
        assert min(lo_n, lo_d) == 0
        assert not f.num.uses_var(1) and not f.den.uses_var(1)

    def test_cross_equality(self):
        one = LaurentPoly.const(2, 1)
        u2 = LaurentPoly.var(2, 1)
        a = MultiRationalFunction.make(one - u2 * u2, (one - u2) * (one + u2))
        b = MultiRationalFunction.const(2, 1)
        assert a.equal(b)
