"""Curve data, zeta factors and special values."""

from fractions import Fraction as F

import pytest

from nazeta.algebra import Poly, RationalFunction, series_exp
from nazeta.curve import (
    artin_zeta,
    artin_zeta_value,
    completed_zeta_factor,
    completed_zeta_value,
    curve_from_numerator,
    curve_from_point_counts,
    elliptic_curve,
    zeta_special_residue,
)
from nazeta.errors import DomainError, PoleError, ValidationError

GENUS2_P = Poly.of(1, 0, 2) ** 2


def brute_force_numerator(g, q, counts):
    """Oracle: expand exp(sum N_m t^m/m)(1-t)(1-qt) as a raw series."""
    cs = [F(n, m + 1) for m, n in enumerate(counts)]
    z = series_exp(cs, g)
    out = []
    for i in range(g + 1):
        acc = z[i]
        if i >= 1:
            acc -= (q + 1) * z[i - 1]
        if i >= 2:
            acc += q * z[i - 2]
        out.append(acc)
    return out


class TestConstruction:
    def test_elliptic_supersingular_shape(self):
        c = elliptic_curve(2, 3)
        expected_low = brute_force_numerator(1, 2, [3])
        assert list(c.P.coeffs[:2]) == expected_low[:2]
        assert c.P == Poly.of(1, 0, 2)

    def test_elliptic_trace_two(self):
        assert elliptic_curve(2, 1).P == Poly.of(1, -2, 2)

    def test_genus2_round_trip(self):
        curve = curve_from_numerator(2, 2, GENUS2_P.coeffs)
        counts = curve.point_counts(2)
        assert curve_from_point_counts(2, 2, counts).P == GENUS2_P

    def test_count_length_enforced(self):
        with pytest.raises(DomainError):
            curve_from_point_counts(2, 2, [3])

    def test_symmetry_violation_names_index(self):
        with pytest.raises(ValidationError) as err:
            curve_from_numerator(1, 2, [1, 0, 3])
        assert "i=0" in str(err.value)

    def test_genus_zero_rejected(self):
        with pytest.raises(ValidationError):
            curve_from_numerator(0, 2, [1])

    def test_weil_check(self):
        assert elliptic_curve(3, 4).weil_numbers_check()
        assert curve_from_numerator(2, 2, GENUS2_P.coeffs).weil_numbers_check()


class TestArtinZeta:
    def test_elliptic_closed_form(self):
        c = elliptic_curve(2, 3)
        expected = RationalFunction.make(
            Poly.of(1, 0, 2), Poly.of(1, -1) * Poly.of(1, -2), "t"
        )
        assert artin_zeta(c) == expected

    def test_constant_term_one(self):
        for q, n in ((2, 3), (3, 4), (5, 6)):
            z = artin_zeta(elliptic_curve(q, n))
            assert z.evaluate(0) == 1

    def test_values_at_integers(self):
        c = elliptic_curve(2, 3)
        assert artin_zeta_value(c, 2) == artin_zeta(c).evaluate(F(1, 4))


class TestCompletedZeta:
    def test_constant_value_example(self):
        c = elliptic_curve(2, 3)
        assert completed_zeta_factor(c, 0, 2).value.as_fraction() == 3
        assert completed_zeta_value(c, 2) == 3

    def test_reflection_pairs(self):
        c = elliptic_curve(2, 3)
        assert (
            completed_zeta_factor(c, 1, 2).value
            == completed_zeta_factor(c, -1, -1).value
        )

    @pytest.mark.parametrize("curve", [
        elliptic_curve(2, 3),
        elliptic_curve(3, 4),
        curve_from_numerator(2, 2, GENUS2_P.coeffs),
    ])
    def test_reflection_grid(self, curve):
        for k in range(-5, 6):
            for h in range(-6, 7):
                if k == 0 and (h in (0, 1) or 1 - h in (0, 1)):
                    continue
                a = completed_zeta_factor(curve, k, h).value
                b = completed_zeta_factor(curve, -k, 1 - h).value
                assert a == b, (k, h)

    def test_simple_pole_at_one(self):
        zf = completed_zeta_factor(elliptic_curve(2, 3), 1, 1)
        assert zf.value.den.evaluate(1) == 0
        assert zf.value.num.evaluate(1) != 0

    def test_pole_arguments_rejected(self):
        c = elliptic_curve(2, 3)
        for h in (0, 1):
            with pytest.raises(PoleError):
                completed_zeta_factor(c, 0, h)


class TestSpecialResidue:
    def test_elliptic_value(self):
        assert zeta_special_residue(elliptic_curve(2, 3)) == 3

    def test_elliptic_general_formula(self):
        for q, n in ((2, 1), (3, 4), (4, 7), (5, 9)):
            c = elliptic_curve(q, n)
            assert zeta_special_residue(c) == F(n, q - 1)

    def test_genus2_value(self):
        assert zeta_special_residue(curve_from_numerator(2, 2, GENUS2_P.coeffs)) == 9

    def test_two_evaluations_agree(self):
        # q^g P(1/q)/(q-1) = P(1)/(q-1) by coefficient symmetry
        for curve in (
            elliptic_curve(2, 5),
            elliptic_curve(7, 10),
            curve_from_numerator(2, 3, (Poly.of(1, -1, 3) * Poly.of(1, 2, 3)).coeffs),
        ):
            q = F(curve.q)
            lhs = q**curve.g * curve.P.evaluate(1 / q) / (q - 1)
            assert zeta_special_residue(curve) == lhs
            assert lhs == curve.P.evaluate(1) / (q - 1)
