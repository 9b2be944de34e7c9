"""Group zeta assembly, functional equations, zeros, uniformity."""

from fractions import Fraction as F

import pytest

from nazeta.algebra import Poly, RationalFunction
from nazeta.curve import (
    completed_zeta_factor,
    curve_from_numerator,
    elliptic_curve,
)
from nazeta.groupzeta import (
    UniformityMatch,
    UniformityNotFound,
    edge_residue,
    f_factor,
    fe_check_group,
    fe_substitution,
    fg_involution_check,
    g_factor,
    group_zeta,
    group_zeta_zeros,
    omega_D_decompose,
    period_gp,
    uniformity_match,
)
from nazeta.purezeta import elliptic_rank2_inputs, pure_zeta, zagier_beta
from nazeta.rootsys import build_root_system, enumerate_weyl, parabolic_data

E23 = elliptic_curve(2, 3)
GENUS2 = curve_from_numerator(2, 2, (Poly.of(1, 0, 2) ** 2).coeffs)


def pair(label, rank, p):
    rs = build_root_system(label, rank)
    W = enumerate_weyl(rs)
    return rs, W, parabolic_data(rs, W, p)


A1 = pair("A", 1, 1)


class TestRankOnePair:
    def test_period_hand_expansion(self):
        rs, W, pd = A1
        one = RationalFunction.const(1, "u")
        u = RationalFunction.variable("u")
        z1 = completed_zeta_factor(E23, 1, 1).value
        z2 = completed_zeta_factor(E23, 1, 2).value
        expected = one / (one - u) + (z1 / z2) / (
            one - RationalFunction.const(4, "u") / u
        )
        assert period_gp(E23, rs, W, pd) == expected

    def test_normalization_table(self):
        z = group_zeta(E23, *A1)
        assert z.normalization == {(1, 2): 1}

    def test_closed_form(self):
        rs, W, pd = A1
        z = group_zeta(E23, rs, W, pd)
        one = RationalFunction.const(1, "u")
        u = RationalFunction.variable("u")
        z1 = completed_zeta_factor(E23, 1, 1).value
        z2 = completed_zeta_factor(E23, 1, 2).value
        expected = z2 / (one - u) + z1 / (one - RationalFunction.const(4, "u") / u)
        assert z.zeta == expected
        # and the fully reduced closed form for q=2, N=3
        assert z.zeta == RationalFunction.make(
            Poly.of(4, 1, 1), Poly.of(4, -5, 1), "u"
        )

    def test_period_evaluation_two_ways(self):
        rs, W, pd = A1
        om = period_gp(E23, rs, W, pd)
        val = om.evaluate(F(-1))
        one = RationalFunction.const(1, "u")
        u = RationalFunction.variable("u")
        z1 = completed_zeta_factor(E23, 1, 1).value
        z2 = completed_zeta_factor(E23, 1, 2).value
        term1 = (one / (one - u)).evaluate(F(-1))
        term2 = (z1.evaluate(F(-1)) / z2.evaluate(F(-1))) / (1 - F(4) / F(-1))
        assert val == term1 + term2


class TestPeriodStructure:
    def test_summand_per_surviving_element(self):
        from nazeta.groupzeta import weyl_term

        rs, W, pd = pair("A", 2, 1)
        total = RationalFunction.const(0, "u")
        for w in pd.weyl_subset:
            total = total + weyl_term(E23, rs, W, pd, w)
        assert total == period_gp(E23, rs, W, pd)
        assert len(pd.weyl_subset) == 5


class TestFunctionalEquation:
    @pytest.mark.parametrize("curve", [E23, elliptic_curve(3, 4), GENUS2])
    def test_a1(self, curve):
        z = group_zeta(curve, *A1)
        ok, _ = fe_check_group(z)
        assert ok

    @pytest.mark.parametrize("p", [1, 2])
    def test_a2(self, p):
        rs, W, pd = pair("A", 2, p)
        for curve in (E23, GENUS2):
            ok, _ = fe_check_group(group_zeta(curve, rs, W, pd))
            assert ok

    def test_corrupted_fails(self):
        z = group_zeta(E23, *A1)
        bad_num = Poly.from_list(
            [z.zeta.num[0] + 1] + list(z.zeta.num.coeffs[1:])
        )
        bad = z.__class__(
            RationalFunction.make(bad_num, z.zeta.den, "u"),
            z.omega,
            z.normalization,
            z.c_p,
            z.route,
            z.curve,
            z.rs,
            z.pd,
        )
        ok, _ = fe_check_group(bad)
        assert not ok


class TestDecomposition:
    def test_a1_trivial_denominator(self):
        rs, W, pd = A1
        z = group_zeta(E23, rs, W, pd)
        dec = omega_D_decompose(E23, rs, W, pd, z)
        assert dec.denominator == RationalFunction.const(1, "u")
        assert dec.clearing == completed_zeta_factor(E23, 1, 2).value
        assert dec.omega_global == z.zeta

    def test_a2_nontrivial(self):
        rs, W, pd = pair("A", 2, 1)
        z = group_zeta(E23, rs, W, pd)
        dec = omega_D_decompose(E23, rs, W, pd, z)
        assert dec.denominator != RationalFunction.const(1, "u")
        assert z.zeta * dec.denominator == dec.omega_global
        assert dec.certificate.passed


class TestInvolution:
    def test_a1_hand_values(self):
        rs, W, pd = A1
        one = RationalFunction.const(1, "u")
        u = RationalFunction.variable("u")
        z1 = completed_zeta_factor(E23, 1, 1).value
        z2 = completed_zeta_factor(E23, 1, 2).value
        fid = f_factor(E23, rs, W, pd, W.identity)
        gid = g_factor(E23, rs, W, pd, W.identity)
        assert fid * gid == z2 / (one - u)
        fw0 = f_factor(E23, rs, W, pd, W.longest)
        gw0 = g_factor(E23, rs, W, pd, W.longest)
        assert fw0 * gw0 == z1 / (one - RationalFunction.const(4, "u") / u)

    @pytest.mark.parametrize(
        "label,rank,p",
        [("A", 1, 1), ("A", 2, 1), ("A", 2, 2), ("A", 3, 2)],
    )
    def test_full_certificates(self, label, rank, p):
        rs, W, pd = pair(label, rank, p)
        cert = fg_involution_check(E23, rs, W, pd)
        assert cert.passed
        per_w = [c for c in cert.checks if c["identity"] == "f involution"]
        assert len(per_w) == len(pd.weyl_subset)


class TestZeros:
    def test_a1_elliptic_family(self):
        for q in (2, 3, 4, 5):
            for n in (q, q + 1, q + 2):
                z = group_zeta(elliptic_curve(q, n), *A1)
                rep = group_zeta_zeros(z, tol=1e-9)
                assert rep.verdict, (q, n)
                assert rep.center_modulus == pytest.approx(float(q))

    def test_a1_genus2(self):
        z = group_zeta(GENUS2, *A1)
        rep = group_zeta_zeros(z)
        assert rep.verdict

    def test_zero_count_stable_under_reflection(self):
        z = group_zeta(E23, *A1)
        reflected = fe_substitution(z.zeta, 2, z.c_p)
        assert reflected.num.degree == z.zeta.num.degree

    def test_a2_report_emitted(self):
        rs, W, pd = pair("A", 2, 1)
        z = group_zeta(E23, rs, W, pd)
        rep = group_zeta_zeros(z)
        assert len(rep.zeros_u) == z.zeta.num.degree
        # exploratory: no verdict asserted, but the report is well formed
        assert all(len(c) == 2 for c in rep.s_coordinates)


class TestEdgeResidue:
    def test_a1_value_against_derivative_oracle(self):
        z = group_zeta(E23, *A1)
        er = edge_residue(z)
        assert er.order == 1
        # independent oracle: simple-pole residue of f/u via the
        # derivative of the denominator
        u0 = F(4)
        f = z.zeta.mul_monomial(-1)
        quotient = f.den.exact_div(Poly.from_list([-u0, 1]))
        res = f.num.evaluate(u0) / quotient.evaluate(u0)
        assert er.value == -res
        assert er.value == -2

    def test_no_pole_returns_zero(self):
        rs, W, pd = A1
        z = group_zeta(E23, rs, W, pd)
        shifted = z.__class__(
            RationalFunction.make(Poly.of(1), Poly.of(1, 1), "u"),
            z.omega, z.normalization, z.c_p, z.route, z.curve, z.rs, z.pd,
        )
        er = edge_residue(shifted)
        assert er.order == 0 and er.value == 0

    def test_double_pole_reports_principal_part(self):
        rs, W, pd = A1
        doubled = z = group_zeta(E23, rs, W, pd)
        f = RationalFunction.make(
            Poly.of(1), Poly.from_list([-4, 1]) ** 2, "u"
        )
        fake = z.__class__(
            f, z.omega, z.normalization, z.c_p, z.route, z.curve, z.rs, z.pd
        )
        er = edge_residue(fake)
        assert er.order == 2 and er.value is None
        assert len(er.principal) == 2

    def test_mass_comparison_row(self):
        # printed for inspection only; just confirm both values exist
        z = group_zeta(E23, *A1)
        er = edge_residue(z)
        mass = zagier_beta(E23, 2, 0)
        assert er.value is not None and mass == 6


class TestUniformity:
    @pytest.mark.parametrize("q,n", [(2, 3), (3, 4)])
    def test_rank2_match(self, q, n):
        c = elliptic_curve(q, n)
        z = group_zeta(c, *pair("A", 1, 1))
        pz = pure_zeta(c, elliptic_rank2_inputs(c))
        match = uniformity_match(pz.completed.retag("u"), z)
        assert isinstance(match, UniformityMatch)
        assert match.verified
        assert (match.a, match.b) == (2, -2)
        assert match.c == F(n, q - 1)

    def test_self_match_recovers_scale(self):
        z = group_zeta(E23, *A1)
        match = uniformity_match(z.zeta.scale(F(7, 2)), z)
        assert isinstance(match, UniformityMatch)
        assert (match.a, match.b, match.c) == (1, 0, F(7, 2))

    def test_mismatched_inputs_not_found(self):
        rs, W, pd = pair("A", 2, 1)
        z2 = group_zeta(E23, rs, W, pd)
        pz = pure_zeta(E23, elliptic_rank2_inputs(E23))
        match = uniformity_match(pz.completed.retag("u"), z2)
        assert isinstance(match, UniformityNotFound)


class TestRouteEquivalence:
    @pytest.mark.parametrize("label,rank,p", [("A", 1, 1), ("A", 2, 1), ("A", 2, 2)])
    def test_formula_vs_residue_engine(self, label, rank, p):
        rs, W, pd = pair(label, rank, p)
        za = group_zeta(E23, rs, W, pd, route="formula2")
        zb = group_zeta(E23, rs, W, pd, route="residue-engine")
        assert za.zeta == zb.zeta
        assert zb.route == "residue-engine"


class TestAllSupportedPairs:
    @pytest.mark.parametrize(
        "label,rank,ps",
        [
            ("B", 2, (1, 2)),
            ("C", 2, (1, 2)),
            ("B", 3, (1, 2, 3)),
            ("C", 3, (1, 2, 3)),
            ("G2", 2, (1, 2)),
        ],
    )
    def test_fe_holds_everywhere(self, label, rank, ps):
        rs = build_root_system(label, rank)
        W = enumerate_weyl(rs)
        for p in ps:
            pd = parabolic_data(rs, W, p)
            z = group_zeta(E23, rs, W, pd)
            assert fe_check_group(z)[0], (label, rank, p)
