"""Pure non-abelian zeta functions and the semi-stable mass formulas.

The rank-r pure zeta of a curve is assembled from the alpha-table of
weighted bundle counts in degrees 0, r, ..., r(g-1) and the mass
beta(0), via the closed form

    Z = sum_m alpha(rm) (T^m + Q^{g-1-m} T^{2(g-1)-m})
        + alpha(r(g-1)) T^{g-1}
        + (Q-1) beta(0) T^g / ((1-T)(1-QT)),       T = t^r, Q = q^r.

The mass itself comes in two independently coded routes, the
composition sum with fractional-part corrections and its reformulation
through completed zeta values, which must agree exactly.  The module
also carries the two all-degree counterexample zetas whose zeros leave
the critical circle, and the numeric Riemann-Hypothesis reports.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Poly,
    Rat,
    RationalFunction,
    SubstRule,
    _frac,
    poly_complex_roots,
    series_log_coefficients,
    substitute,
)
from .certificate import Certificate
from .compositions import compositions, parabolic_mass_sum
from .curve import (
    CurveData,
    artin_zeta_value,
    completed_zeta_value,
    zeta_special_residue,
)
from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class PureZetaInputs:
    """Alpha-table and mass feeding the rank-r pure zeta."""

    r: int
    alphas: tuple[Fraction, ...]
    beta0: Fraction

    @staticmethod
    def make(r: int, alphas, beta0: Rat) -> "PureZetaInputs":
        if r < 1:
            raise DomainError("rank must be >= 1")
        alphas = tuple(_frac(a) for a in alphas)
        beta0 = _frac(beta0)
        if any(a < 0 for a in alphas) or beta0 < 0:
            raise DomainError("bundle counts cannot be negative")
        return PureZetaInputs(r, alphas, beta0)


@dataclass(frozen=True)
class PureZetaResult:
    """Rank-r pure zeta in T = t^r plus its completed variant in t."""

    zeta: RationalFunction  # variable T
    completed: RationalFunction  # variable t
    numerator: Poly  # degree-2g numerator over (1-T)(1-QT)
    Q: Fraction
    r: int
    g: int


# ---------------------------------------------------------------------------
# Mass formulas
# ---------------------------------------------------------------------------


def _frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def zagier_beta(c: CurveData, r: int, d: int = 0) -> Fraction:
    """Mass of rank-r degree-d semi-stable bundles by the composition sum.

    Sums q^{(g-1) sum_{i<j} n_i n_j} c_{n,d}(q) prod_j v_{n_j}(q) over
    ordered compositions of r, where

        v_n(q) = [P(1)/(q-1)] q^{(n^2-1)(g-1)} zeta_X(2) ... zeta_X(n),
        c_{n,d}(q) = prod_i q^{(n_i+n_{i+1}) frac((n_1+...+n_i) d / r)}
                     / (1 - q^{n_i+n_{i+1}}).

    The fractional-part exponents of a composition always sum to an
    integer, which is asserted rather than assumed.
    """
    if r < 1:
        raise DomainError("rank must be >= 1")
    q = Fraction(c.q)
    g = c.g

    @functools.lru_cache(maxsize=None)
    def v(n: int) -> Fraction:
        val = c.P.evaluate(1) / (q - 1)
        val *= q ** ((n * n - 1) * (g - 1))
        for i in range(2, n + 1):
            val *= artin_zeta_value(c, i)
        return val

    total = Fraction(0)
    for comp in compositions(r):
        k = len(comp)
        cross = sum(
            comp[i] * comp[j] for i in range(k) for j in range(i + 1, k)
        )
        term = q ** ((g - 1) * cross)
        exponent = Fraction(0)
        for i in range(k - 1):
            prefix = sum(comp[: i + 1])
            exponent += (comp[i] + comp[i + 1]) * _frac_part(
                Fraction(prefix * d, r)
            )
            term /= 1 - q ** (comp[i] + comp[i + 1])
        if exponent.denominator != 1:
            raise ValidationError(
                f"non-integer q-exponent {exponent} for composition {comp}"
            )
        term *= q ** int(exponent)
        for n in comp:
            term *= v(n)
        total += term
    return total


def mass_reformulated(c: CurveData, r: int) -> Fraction:
    """Degree-zero mass through completed zeta special values.

    Evaluates q^{(g-1) r(r-1)/2} times the alternating composition sum
    with adjacent-pair weights q^{n_j+n_{j+1}} - 1 and the product of
    completed values (stripped residue at 1).  Must equal
    ``zagier_beta(c, r, 0)`` exactly.
    """
    if r < 1:
        raise DomainError("rank must be >= 1")
    q = Fraction(c.q)

    def zhat(i: int) -> Fraction:
        if i == 1:
            return zeta_special_residue(c)
        return completed_zeta_value(c, i)

    def pair_weight(a: int, b: int) -> Fraction:
        return q ** (a + b) - 1

    sum_part = parabolic_mass_sum(r, zhat, pair_weight)
    return q ** ((c.g - 1) * r * (r - 1) // 2) * sum_part


def elliptic_beta2_closed_form(q: int, n_points: int) -> Fraction:
    """Rank-two degree-zero mass of an elliptic curve, closed form."""
    n = Fraction(n_points)
    return n / (q - 1) * (1 + n / (q * q - 1))


# ---------------------------------------------------------------------------
# Input providers
# ---------------------------------------------------------------------------


def elliptic_rank2_inputs(c: CurveData) -> PureZetaInputs:
    """Rank-two inputs for an elliptic curve: alpha(0) = N/(q-1)."""
    if c.g != 1:
        raise DomainError("rank-two provider applies to genus-one curves")
    n = c.point_counts(1)[0]
    alpha0 = Fraction(n, c.q - 1)
    return PureZetaInputs.make(2, [alpha0], elliptic_beta2_closed_form(c.q, n))


def rank1_inputs(c: CurveData) -> PureZetaInputs:
    """Rank-one inputs for an elliptic curve: alpha(0) = 1, beta = N/(q-1)."""
    if c.g != 1:
        raise DomainError("rank-one provider applies to genus-one curves")
    return PureZetaInputs.make(1, [Fraction(1)], zagier_beta(c, 1, 0))


# ---------------------------------------------------------------------------
# The pure zeta
# ---------------------------------------------------------------------------


def pure_zeta(c: CurveData, inputs: PureZetaInputs) -> PureZetaResult:
    """Assemble the rank-r pure zeta of a curve from its count inputs."""
    if len(inputs.alphas) != c.g:
        raise DomainError(
            f"alpha table must have length g = {c.g}, got {len(inputs.alphas)}"
        )
    g, r = c.g, inputs.r
    Q = Fraction(c.q) ** r
    den = Poly.of(1, -1) * Poly.from_list([1, -Q])
    poly_part = Poly.zero()
    for m in range(g - 1):
        bump = Poly.monomial(m).scale(inputs.alphas[m]) + Poly.monomial(
            2 * (g - 1) - m
        ).scale(inputs.alphas[m] * Q ** (g - 1 - m))
        poly_part = poly_part + bump
    poly_part = poly_part + Poly.monomial(g - 1).scale(inputs.alphas[g - 1])
    numerator = poly_part * den + Poly.monomial(g).scale(
        (Q - 1) * inputs.beta0
    )
    zeta_T = RationalFunction.make(numerator, den, "T")
    completed = substitute(zeta_T, SubstRule.power(1, r, "t")).mul_monomial(
        -r * (g - 1)
    )
    return PureZetaResult(zeta_T, completed, numerator, Q, r, g)


def pure_numerator(z: RationalFunction, Q: Fraction) -> Poly:
    """Recover the degree-2g numerator of a pure zeta over (1-T)(1-QT)."""
    den = Poly.of(1, -1) * Poly.from_list([1, -Q])
    prod = z * RationalFunction.from_poly(den, z.var)
    if prod.den.degree != 0:
        raise DomainError("function does not have the pure-zeta denominator")
    return prod.num.scale(1 / prod.den[0])


def fe_check_pure(
    z: RationalFunction, g: int, q: int, r: int
) -> tuple[bool, Certificate]:
    """Verify the numerator symmetry p_{2g-i} = Q^{g-i} p_i exactly."""
    Q = Fraction(q) ** r
    p = pure_numerator(z, Q)
    cert = Certificate("pure-zeta functional equation")
    for i in range(2 * g + 1):
        lhs = p[2 * g - i]
        rhs = Q ** (g - i) * p[i]
        cert.record(
            f"p[{2 * g - i}] = Q^{g - i} * p[{i}]",
            lhs == rhs,
            lhs=str(lhs),
            rhs=str(rhs),
        )
    return cert.passed, cert


# ---------------------------------------------------------------------------
# Riemann Hypothesis reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RHReport:
    """Zero locations of a zeta numerator against the critical circle."""

    polynomial: Poly
    Q: Fraction
    roots: tuple[complex, ...]
    deviations: tuple[float, ...]
    verdict: bool
    tolerance: float
    exact: bool = False

    def max_deviation(self) -> float:
        return max(self.deviations) if self.deviations else 0.0

    def to_json(self) -> dict:
        return {
            "polynomial": [str(c) for c in self.polynomial.coeffs],
            "Q": str(self.Q),
            "roots": [[z.real, z.imag] for z in self.roots],
            "deviations": list(self.deviations),
            "verdict": "pass" if self.verdict else "fail",
            "tolerance": self.tolerance,
            "exact": self.exact,
        }


def _exact_quadratic_rh(p: Poly, Q: Fraction) -> bool:
    """Exact critical-circle test for a degree-two numerator.

    Complex pair: both roots sit on |T| = Q^{-1/2} iff the discriminant
    is negative and constant/leading = 1/Q.  Real roots must be at
    +-Q^{-1/2} exactly.
    """
    p0, p1, p2 = p[0], p[1], p[2]
    disc = p1 * p1 - 4 * p0 * p2
    if disc < 0:
        return p0 * Q == p2
    if disc == 0:
        return p1 * p1 * Q == 4 * p2 * p2
    return p1 == 0 and p0 * Q == -p2


def rh_report(p: Poly, Q: Rat, tol: float = 1e-9) -> RHReport:
    """Locate the T-roots of p and compare their moduli to Q^{-1/2}.

    Degree two gets the exact discriminant decision; any degree gets the
    numeric root list and deviations | |root| * sqrt(Q) - 1 |.
    """
    if p.is_zero():
        raise DomainError("cannot report on the zero polynomial")
    Q = _frac(Q)
    sqrtq = math.sqrt(float(Q))
    roots: list[complex] = []
    devs: list[float] = []
    if p.degree >= 1:
        for z, mult in poly_complex_roots(p, tol=min(tol, 1e-9)):
            for _ in range(mult):
                roots.append(z)
                devs.append(abs(abs(z) * sqrtq - 1.0))
    if p.degree == 2:
        verdict = _exact_quadratic_rh(p, Q)
        return RHReport(p, Q, tuple(roots), tuple(devs), verdict, tol, True)
    verdict = all(d <= tol for d in devs)
    return RHReport(p, Q, tuple(roots), tuple(devs), verdict, tol, False)


# ---------------------------------------------------------------------------
# Counterexample zetas (all-degree and partial-degree counting)
# ---------------------------------------------------------------------------


def mixed_zeta_rank2(
    q: int,
    n_points: int,
    alpha0: Rat | None = None,
    beta0: Rat | None = None,
    beta1: Rat | None = None,
) -> RationalFunction:
    """Rank-two zeta counting semi-stable bundles of all degrees.

    The even degrees contribute alpha(0) + beta(0)(q^2-1)t^2 / D and the
    odd degrees beta(1)(qt/(1-q^2t^2) - t/(1-t^2)), D = (1-t^2)(1-q^2t^2).
    With the elliptic defaults the numerator works out to
    [N/(q-1)] (1 + (q-1)t + (N-2)t^2 + (q-1)q t^3 + q^2 t^4); the middle
    coefficient is pinned by the t^2 count alpha(2) = (q^2-1) beta(0).
    """
    n = Fraction(n_points)
    a0 = _frac(alpha0) if alpha0 is not None else n / (q - 1)
    b0 = (
        _frac(beta0)
        if beta0 is not None
        else elliptic_beta2_closed_form(q, n_points)
    )
    b1 = _frac(beta1) if beta1 is not None else n / (q - 1)
    t = RationalFunction.variable("t")
    one = RationalFunction.const(1, "t")
    t2 = t * t
    even_den = (one - t2) * (one - t2.scale(q * q))
    f = RationalFunction.const(a0, "t")
    f = f + (t2.scale(b0 * (q * q - 1))) / even_den
    odd = t.scale(q) / (one - t2.scale(q * q)) - t / (one - t2)
    return f + odd.scale(b1)


def mixed_numerator(q: int, n_points: int) -> Poly:
    """Quartic numerator of the all-degree rank-two zeta, over N/(q-1)."""
    n = n_points
    return Poly.of(1, q - 1, n - 2, (q - 1) * q, q * q)


def partial_zeta_rank3_elliptic(q: int, n_points: int) -> RationalFunction:
    """Rank-three zeta over degrees 1, 2 mod 3 on an elliptic curve.

    Equals N [(qt + q^2 t^2)/(1-q^3 t^3) - (t + t^2)/(1-t^3)]; expanding
    over the common denominator factors the numerator as
    (q-1) t [1 + (q+1) t + q(q+1) t^3 + q^2 t^4].
    """
    t = RationalFunction.variable("t")
    one = RationalFunction.const(1, "t")
    t2, t3 = t * t, t * t * t
    f = (t.scale(q) + t2.scale(q * q)) / (one - t3.scale(q**3))
    f = f - (t + t2) / (one - t3)
    return f.scale(n_points)


def partial_rank3_bracket(q: int) -> Poly:
    """Bracket factor of the rank-three partial zeta numerator."""
    return Poly.of(1, q + 1, 0, q * (q + 1), q * q)


def partial_rank3_identity_check(q: int, n_points: int) -> bool:
    """Exact agreement of the two displayed forms of the partial zeta."""
    t = RationalFunction.variable("t")
    one = RationalFunction.const(1, "t")
    t3 = t * t * t
    den = (one - t3) * (one - t3.scale(q**3))
    numerator = Poly.of(0, q - 1) * partial_rank3_bracket(q)
    rhs = RationalFunction.from_poly(numerator, "t").scale(n_points) / den
    return partial_zeta_rank3_elliptic(q, n_points) == rhs


# ---------------------------------------------------------------------------
# Counting invariants from a zeta
# ---------------------------------------------------------------------------


def bundle_counts(
    z: RationalFunction, alpha0: Rat, Q: Rat, upto: int, tol: float = 1e-8
) -> list[Fraction]:
    """Counts N(m) = m [T^m] log(Z/alpha0) for m = 1..upto.

    Cross-checked against 1 + Q^m - sum_i omega_i^m with the omega_i the
    numeric inverse roots of the numerator; disagreement beyond the
    relative tolerance raises.
    """
    alpha0 = _frac(alpha0)
    Q = _frac(Q)
    if alpha0 == 0:
        raise DomainError("alpha(0) must be nonzero")
    normalized = z.scale(1 / alpha0)
    cs = series_log_coefficients(normalized, upto)
    counts = [m * cs[m - 1] for m in range(1, upto + 1)]
    p = pure_numerator(normalized, Q)
    omegas: list[complex] = []
    for root, mult in poly_complex_roots(p, tol=1e-10):
        omegas.extend([1 / root] * mult)
    for m in range(1, upto + 1):
        alt = 1 + float(Q) ** m - sum(w**m for w in omegas).real
        ref = float(counts[m - 1])
        if abs(alt - ref) > tol * max(1.0, abs(ref)):
            raise ValidationError(
                f"count N({m}) disagrees between series ({ref}) and roots ({alt})"
            )
    return counts


# ---------------------------------------------------------------------------
# Genus-two criterion and Clifford-type validation
# ---------------------------------------------------------------------------


def _sign_with_sqrt(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Exact sign of a + b*sqrt(d) for rational a, b and d >= 0."""
    if d < 0:
        raise DomainError("negative radicand")
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if a > 0:  # b < 0: positive iff a^2 > b^2 d
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def genus2_rh_criterion(
    alpha0: Rat, alpha2: Rat, beta0: Rat, Q: Rat, tol: float = 1e-9
):
    """Critical-circle test for the genus-two rank-two numerator.

    Splits the quartic as alpha(0)(1 - A T + Q T^2)(1 - B T + Q T^2) with
    A + B = (Q+1) - alpha'(2) and AB = (Q-1) beta'(0) - (Q+1) alpha'(2),
    then requires A^2 < 4Q and B^2 < 4Q, decided in exact arithmetic.
    When A, B come out complex the quartic is handed to the numeric
    report instead.
    """
    alpha0, alpha2, beta0, Q = map(_frac, (alpha0, alpha2, beta0, Q))
    if alpha0 == 0:
        raise DomainError("alpha(0) must be nonzero")
    ap = alpha2 / alpha0
    bp = beta0 / alpha0
    s = (Q + 1) - ap
    prod = (Q - 1) * bp - (Q + 1) * ap
    disc = s * s - 4 * prod
    if disc >= 0:
        # A = (s + sqrt(disc))/2: test 16Q - s^2 - disc > +-2s sqrt(disc)
        base = 16 * Q - s * s - disc
        ok_a = _sign_with_sqrt(base, -2 * s, disc) > 0
        ok_b = _sign_with_sqrt(base, 2 * s, disc) > 0
        root = math.sqrt(float(disc))
        a_val = (float(s) + root) / 2
        b_val = (float(s) - root) / 2
        return a_val, b_val, ok_a and ok_b
    root = complex(0.0, math.sqrt(-float(disc)))
    a_val = (complex(float(s)) + root) / 2
    b_val = (complex(float(s)) - root) / 2
    p = genus2_numerator(alpha0, alpha2, beta0, Q)
    report = rh_report(p, Q, tol)
    return a_val, b_val, report.verdict


def genus2_numerator(
    alpha0: Rat, alpha2: Rat, beta0: Rat, Q: Rat
) -> Poly:
    """Expanded genus-two rank-two numerator in T."""
    alpha0, alpha2, beta0, Q = map(_frac, (alpha0, alpha2, beta0, Q))
    return Poly.from_list(
        [
            alpha0,
            alpha2 - alpha0 * (Q + 1),
            2 * Q * alpha0 - (Q + 1) * alpha2 + beta0 * (Q - 1),
            (alpha2 - alpha0 * (Q + 1)) * Q,
            alpha0 * Q * Q,
        ]
    )


def clifford_validate(
    c: CurveData, r: int, alphas: dict[int, Fraction], betas: dict[int, Fraction]
) -> list[str]:
    """Sanity warnings for alpha/beta tables against the section bound.

    A semi-stable bundle of slope in [0, 2g-2] has at most floor(r + d/2)
    sections, so alpha(d) can be at most (q^floor(r+d/2) - 1) beta(d);
    the floor is sound because section counts are integers.  Returns
    human-readable warnings, never raises.
    """
    warnings = []
    for d in sorted(alphas):
        alpha = _frac(alphas[d])
        if alpha < 0:
            warnings.append(f"alpha({d}) = {alpha} is negative")
            continue
        if d < 0 or d > r * (2 * c.g - 2) or d not in betas:
            continue
        exponent = r + d // 2  # floor of r + d/2
        bound = (Fraction(c.q) ** exponent - 1) * _frac(betas[d])
        if alpha > bound:
            note = " (odd degree, exponent floored)" if d % 2 else ""
            warnings.append(
                f"alpha({d}) = {alpha} exceeds section bound "
                f"(q^{exponent} - 1) * beta({d}) = {bound}{note}"
            )
    return warnings
