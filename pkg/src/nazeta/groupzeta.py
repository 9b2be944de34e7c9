"""Group zeta functions for pairs (split group, maximal parabolic).

The period attached to such a pair is a finite sum over the surviving
Weyl subset: each w contributes rational factors 1/(1 - u^k q^{1-h})
over (w^{-1}Delta) \\ Delta_p and a ratio of completed zeta factors
over the inversion set, with (k, h) = (<lambda_p, alpha^vee>, ht
alpha^vee) per root.  Numerator entries that would sit at the pole
argument, the simple Levi roots, enter as the stripped special value
q^g P(1/q)/(q-1) instead; that convention is exactly what the iterated
residues of the full-rank period produce once each residue's 1/log q is
cancelled, and it is cross-checked by the residues module.

Multiplying the period by the minimal normalization product, the
positive max-difference exponents over h >= 2, yields the group zeta,
which satisfies the exact functional equation s -> -c_p - s, i.e.
u -> q^{c_p}/u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Poly,
    RationalFunction,
    SubstRule,
    poly_complex_roots,
    substitute,
)
from .certificate import Certificate
from .curve import CurveData, completed_zeta_factor, zeta_special_residue
from .errors import DomainError, ValidationError
from .rootsys import (
    CountTable,
    ParabolicData,
    RootSystem,
    WeylElement,
    WeylGroup,
    count_tables,
)


@dataclass(frozen=True)
class GroupZetaResult:
    """The normalized group zeta with its assembly provenance."""

    zeta: RationalFunction  # variable u = q^{-s}
    omega: RationalFunction  # the period before normalization
    normalization: dict  # (k, h) -> exponent, h >= 2
    c_p: Fraction
    route: str  # "formula2" or "residue-engine"
    curve: CurveData
    rs: RootSystem
    pd: ParabolicData


def _root_key(rs: RootSystem, pd: ParabolicData, idx: int) -> tuple[int, int]:
    return (rs.weight_pairing(pd.p0, idx), rs.coroot_height(idx))


def _rational_factor(c: CurveData, k: int, h: int) -> RationalFunction:
    """1 / (1 - u^k q^{1-h}) as a reduced rational function of u."""
    q = Fraction(c.q)
    one = RationalFunction.const(1, "u")
    mono = RationalFunction.const(q ** (1 - h), "u").mul_monomial(k)
    return one / (one - mono)


def _zeta_num_factor(c: CurveData, k: int, h: int) -> RationalFunction:
    """Completed zeta factor, stripped to its special value at (0, 1)."""
    if (k, h) == (0, 1):
        return RationalFunction.const(zeta_special_residue(c), "u")
    if k == 0 and h == 0:
        raise ValidationError("unexpected pole argument (0,0) in a numerator")
    return completed_zeta_factor(c, k, h).value


def weyl_term(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    w: WeylElement,
) -> RationalFunction:
    """The single-w summand of the period."""
    term = rational_part(c, rs, W, pd, w)
    for idx in W.inversion_set(w):
        k, h = _root_key(rs, pd, idx)
        term = term * _zeta_num_factor(c, k, h)
        term = term / completed_zeta_factor(c, k, h + 1).value
    return term


def rational_part(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    w: WeylElement,
) -> RationalFunction:
    """prod over (w^{-1}Delta) \\ Delta_p of 1/(1 - u^k q^{1-h})."""
    winv = w.inverse()
    term = RationalFunction.const(1, "u")
    p0 = pd.p0
    for s_idx in rs.simple_indices():
        pre = winv.apply(s_idx)
        coords = rs.roots[pre]
        if coords[p0] == 0 and rs.is_positive(pre) and sum(map(abs, coords)) == 1:
            continue  # alpha in Delta_p
        k, h = _root_key(rs, pd, pre)
        if (k, h) == (0, 1):
            raise ValidationError("pole clash: Levi simple root in the rational part")
        term = term * _rational_factor(c, k, h)
    return term


def period_gp(
    c: CurveData, rs: RootSystem, W: WeylGroup, pd: ParabolicData
) -> RationalFunction:
    """The period of (G, P): the closed Weyl-subset sum, exact in u."""
    total = RationalFunction.const(0, "u")
    for w in pd.weyl_subset:
        total = total + weyl_term(c, rs, W, pd, w)
    return total


def group_zeta(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    route: str = "formula2",
    table: CountTable | None = None,
) -> GroupZetaResult:
    """Period times the minimal normalization product of zeta factors."""
    if table is None:
        table = count_tables(rs, W, pd)
    if route == "formula2":
        omega = period_gp(c, rs, W, pd)
    elif route == "residue-engine":
        from .residues import iterated_residue, period_full

        omega = iterated_residue(period_full(c, rs, W), pd)
    else:
        raise DomainError(f"unknown route {route!r}")
    zeta = omega
    exponents = table.normalization_exponents()
    for (k, h), m in sorted(exponents.items()):
        zeta = zeta * completed_zeta_factor(c, k, h).value ** m
    return GroupZetaResult(zeta, omega, exponents, pd.c_p, route, c, rs, pd)


# ---------------------------------------------------------------------------
# Functional equation
# ---------------------------------------------------------------------------


def fe_substitution(
    f: RationalFunction, q: int, c_p: Fraction
) -> RationalFunction:
    """Apply u -> q^{c_p}/u, reparametrizing u = v^2 for half-integer c_p."""
    if c_p.denominator == 1:
        return substitute(f, SubstRule.reciprocal(Fraction(q) ** int(c_p)))
    if c_p.denominator == 2:
        doubled = substitute(f, SubstRule.power(1, 2, "v"))
        out = substitute(
            doubled, SubstRule.reciprocal(Fraction(q) ** int(2 * c_p))
        )
        return out
    raise DomainError(f"unsupported parabolic offset c_p = {c_p}")


def fe_check_group(z: GroupZetaResult) -> tuple[bool, Certificate]:
    """Exact check of zeta(-c_p - s) = zeta(s)."""
    cert = Certificate(
        f"group zeta functional equation {z.rs.type_label}{z.rs.rank} p={z.pd.p}"
    )
    reflected = fe_substitution(z.zeta, z.curve.q, z.c_p)
    target = (
        z.zeta
        if z.c_p.denominator == 1
        else substitute(z.zeta, SubstRule.power(1, 2, "v"))
    )
    ok = reflected == target
    cert.record("zeta(-c_p - s) = zeta(s)", ok, c_p=str(z.c_p))
    return ok, cert


# ---------------------------------------------------------------------------
# Global decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    clearing: RationalFunction  # product over positive roots, shifted by 1
    omega_global: RationalFunction  # clearing * period
    denominator: RationalFunction  # the count-difference product
    certificate: Certificate


def omega_D_decompose(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    z: GroupZetaResult | None = None,
) -> Decomposition:
    """Split the group zeta as (clearing * period) / denominator.

    The clearing factor multiplies the completed zeta at (k, h+1) over
    all positive roots; its equality with the product over negative
    roots at (k, h) (a functional-equation reindexing) is certified,
    together with both reflection identities and the exact equation
    zeta * denominator = clearing * period.
    """
    if z is None:
        z = group_zeta(c, rs, W, pd)
    table = count_tables(rs, W, pd)
    cert = Certificate(
        f"global decomposition {rs.type_label}{rs.rank} p={pd.p}"
    )
    clearing = RationalFunction.const(1, "u")
    for idx in range(rs.n_positive):
        k, h = _root_key(rs, pd, idx)
        clearing = clearing * completed_zeta_factor(c, k, h + 1).value
    alt = RationalFunction.const(1, "u")
    for idx in range(rs.n_positive, len(rs.roots)):
        k, h = _root_key(rs, pd, idx)
        alt = alt * completed_zeta_factor(c, k, h).value
    cert.record("clearing product: two forms agree", clearing == alt)

    M = table.max_diff
    N = table.global_counts
    _, kmax = table.k_range
    _, hmax = table.h_range
    den = RationalFunction.const(1, "u")
    for k in range(0, kmax + 1):
        for h in range(2, hmax + 2):
            e = N.get((k, h - 1), 0) - M.get((k, h), 0)
            if e == 0:
                continue
            den = den * completed_zeta_factor(c, k, h).value ** e
    omega_global = clearing * z.omega
    cert.record(
        "zeta * denominator = clearing * period",
        z.zeta * den == omega_global,
    )
    q, cp = c.q, pd.c_p
    cert.record(
        "denominator reflection", fe_substitution(den, q, cp) == den
    )
    cert.record(
        "global numerator reflection",
        fe_substitution(omega_global, q, cp) == omega_global,
    )
    if not cert.passed:
        raise ValidationError(
            "global decomposition failed: "
            + "; ".join(c["identity"] for c in cert.failures())
        )
    return Decomposition(clearing, omega_global, den, cert)


# ---------------------------------------------------------------------------
# Involution structure
# ---------------------------------------------------------------------------


def f_factor(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    w: WeylElement,
) -> RationalFunction:
    return rational_part(c, rs, W, pd, w)


def g_factor(
    c: CurveData,
    rs: RootSystem,
    W: WeylGroup,
    pd: ParabolicData,
    w: WeylElement,
) -> RationalFunction:
    """Product of (stripped) completed zeta factors over w^{-1}Phi^-.

    Levi simple roots in w^{-1}Phi^- sit at the pole argument (0, 1) and
    contribute the stripped special value, mirroring the period's
    convention; without them the sum identity below would be off by one
    stripped value per such root.
    """
    winv = w.inverse()
    term = RationalFunction.const(1, "u")
    for neg in range(rs.n_positive, len(rs.roots)):
        pre = winv.apply(neg)
        k, h = _root_key(rs, pd, pre)
        term = term * _zeta_num_factor(c, k, h)
    return term


def fg_involution_check(
    c: CurveData, rs: RootSystem, W: WeylGroup, pd: ParabolicData
) -> Certificate:
    """Certify the w -> w_0 w w_p involution and the sum identity.

    For every w in the Weyl subset both substitution identities
    f_w(-c_p-s) = f_{w_0 w w_p}(s) and g_w(-c_p-s) = g_{w_0 w w_p}(s)
    must hold exactly, and the clearing-times-period function must equal
    sum_w f_w g_w.
    """
    cert = Certificate(
        f"involution structure {rs.type_label}{rs.rank} p={pd.p}"
    )
    q, cp = c.q, pd.c_p
    perms = {w.perm: w for w in pd.weyl_subset}
    total = RationalFunction.const(0, "u")
    for w in pd.weyl_subset:
        partner = W.longest.compose(w).compose(pd.levi_longest)
        if partner.perm not in perms:
            raise ValidationError("involution leaves the Weyl subset")
        fw = f_factor(c, rs, W, pd, w)
        gw = g_factor(c, rs, W, pd, w)
        fp = f_factor(c, rs, W, pd, partner)
        gp = g_factor(c, rs, W, pd, partner)
        ok_f = fe_substitution(fw, q, cp) == (
            fp if cp.denominator == 1 else substitute(fp, SubstRule.power(1, 2, "v"))
        )
        ok_g = fe_substitution(gw, q, cp) == (
            gp if cp.denominator == 1 else substitute(gp, SubstRule.power(1, 2, "v"))
        )
        cert.record("f involution", ok_f, w=_describe(rs, w))
        cert.record("g involution", ok_g, w=_describe(rs, w))
        if not (ok_f and ok_g):
            raise ValidationError(
                f"involution identity fails at w = {_describe(rs, w)}"
            )
        total = total + fw * gw
    decomp = omega_D_decompose(c, rs, W, pd)
    ok_sum = total == decomp.omega_global
    cert.record("sum of f*g equals clearing * period", ok_sum)
    if not ok_sum:
        raise ValidationError("sum identity for the involution fails")
    return cert


def _describe(rs: RootSystem, w: WeylElement) -> str:
    images = []
    for i, s in enumerate(rs.simple_indices()):
        images.append(f"a{i + 1}->{rs.roots[w.apply(s)]}")
    return ", ".join(images)


# ---------------------------------------------------------------------------
# Zeros and residues
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupZeroReport:
    zeros_u: tuple[complex, ...]
    deviations: tuple[float, ...]
    s_coordinates: tuple[tuple[float, float], ...]
    center_modulus: float  # q^{c_p/2}
    verdict: bool
    tolerance: float

    def to_json(self) -> dict:
        return {
            "zeros_u": [[z.real, z.imag] for z in self.zeros_u],
            "deviations": list(self.deviations),
            "s_coordinates": [list(x) for x in self.s_coordinates],
            "center_modulus": self.center_modulus,
            "verdict": "pass" if self.verdict else "fail",
            "tolerance": self.tolerance,
        }


def group_zeta_zeros(z: GroupZetaResult, tol: float = 1e-9) -> GroupZeroReport:
    """Numerator zeros in u, with deviations from |u| = q^{c_p/2}.

    The s-coordinates are (-log_q|u|, arg(u)/log q); the symmetry line
    Re(s) = -c_p/2 corresponds to |u| = q^{c_p/2}.
    """
    q = z.curve.q
    center = float(q) ** (float(z.c_p) / 2)
    num = z.zeta.num
    zeros: list[complex] = []
    devs: list[float] = []
    coords: list[tuple[float, float]] = []
    if num.degree >= 1:
        lnq = math.log(q)
        for root, mult in poly_complex_roots(num, tol=min(tol, 1e-10)):
            for _ in range(mult):
                zeros.append(root)
                devs.append(abs(abs(root) / center - 1.0))
                re_s = -math.log(abs(root)) / lnq if root != 0 else math.inf
                im_s = math.atan2(root.imag, root.real) / lnq
                coords.append((re_s, im_s))
    verdict = all(d <= tol for d in devs)
    return GroupZeroReport(
        tuple(zeros), tuple(devs), tuple(coords), center, verdict, tol
    )


@dataclass(frozen=True)
class EdgeResidue:
    """Stripped residue of the zeta at its edge pole u = q^{c_p}."""

    value: Fraction | None
    order: int
    principal: tuple[Fraction, ...] = ()


def edge_residue(z: GroupZetaResult) -> EdgeResidue:
    """-Res_{u=q^{c_p}}[zeta/u], exactly; zero when the pole is absent.

    A higher-order pole is reported with its order and the principal
    Laurent coefficients (of (u-u0)^{-order} .. (u-u0)^{-1}) instead of
    a single residue.
    """
    if z.c_p.denominator != 1:
        raise DomainError("edge residue needs an integer parabolic offset")
    u0 = Fraction(z.curve.q) ** int(z.c_p)
    f = z.zeta.mul_monomial(-1)  # zeta(u)/u
    num, den = f.num, f.den
    order = 0
    root_factor = Poly.from_list([-u0, 1])
    while True:
        quot, rem = den.divmod(root_factor)
        if not rem.is_zero():
            break
        den = quot
        order += 1
    if order == 0:
        return EdgeResidue(Fraction(0), 0)
    # Laurent coefficients around u0 via exact Taylor shifts
    num_s = num.shift(u0)
    den_s = den.shift(u0)
    series_len = order
    inv = _series_inverse(den_s, series_len)
    coeffs = []
    for j in range(series_len):
        acc = Fraction(0)
        for i in range(j + 1):
            acc += num_s[i] * inv[j - i]
        coeffs.append(acc)
    # f = sum_j coeffs[j] eps^{j - order}; residue = coeffs[order-1]
    if order == 1:
        return EdgeResidue(-coeffs[0], 1)
    return EdgeResidue(None, order, tuple(-c for c in coeffs))


def _series_inverse(p: Poly, order: int) -> list[Fraction]:
    if p[0] == 0:
        raise DomainError("series inverse needs a unit constant term")
    out = [1 / p[0]]
    for k in range(1, order):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc -= p[j] * out[k - j]
        out.append(acc / p[0])
    return out


# ---------------------------------------------------------------------------
# Uniformity matching
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniformityMatch:
    a: Fraction
    b: Fraction
    c: Fraction
    verified: bool

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "verified": self.verified,
        }


@dataclass(frozen=True)
class UniformityNotFound:
    tried: tuple[tuple[Fraction, Fraction], ...]
    skipped: tuple[tuple[Fraction, Fraction], ...]


def _pole_lines(f: RationalFunction, q: int) -> list[float]:
    """Distinct Re(s) values of the poles, from numeric denominator roots."""
    lines: set[float] = set()
    lnq = math.log(q)
    if f.den.degree < 1:
        return []
    for root, _ in poly_complex_roots(f.den, tol=1e-10):
        if abs(root) < 1e-12:
            continue
        lines.add(round(-math.log(abs(root)) / lnq, 6))
    return sorted(lines)


def _q_power_fraction(q: int, b: Fraction) -> Fraction | None:
    """q^{-b} as an exact rational, or None when it is irrational."""
    if b.denominator == 1:
        return Fraction(q) ** (-int(b))
    root = round(q ** (1.0 / b.denominator))
    if root**b.denominator == q:
        return Fraction(root) ** (-int(b * b.denominator))
    return None


def uniformity_match(
    pure_completed_u: RationalFunction,
    z: GroupZetaResult,
    max_num: int = 3,
    max_den: int = 3,
    b_halfspan: int = 8,
) -> UniformityMatch | UniformityNotFound:
    """Search for (a, b, c) with pure(s) = c * group(a s + b), exactly.

    Candidate slopes a are signed fractions with numerator and
    denominator bounded by the grid parameters; offsets b run over the
    half-integer grid refined by 1/denominator(a).  Candidates are
    narrowed by matching the Re(s) pole lines numerically, then c is
    fixed by evaluation at a sample point and the full identity is
    verified exactly under the reparametrization t = v^{denominator(a)}.
    Candidates whose q^{-b} is irrational cannot be expressed in exact
    rationals and are recorded as skipped.
    """
    q = z.curve.q
    pure_lines = _pole_lines(pure_completed_u, q)
    group_lines = _pole_lines(z.zeta, q)
    tried: list[tuple[Fraction, Fraction]] = []
    skipped: list[tuple[Fraction, Fraction]] = []
    candidates: list[Fraction] = []
    for den in range(1, max_den + 1):
        for num in range(1, max_num + 1):
            for sign in (1, -1):
                a = Fraction(sign * num, den)
                if a not in candidates:
                    candidates.append(a)
    for a in candidates:
        d = a.denominator
        bstep = Fraction(1, 2 * d)
        for j in range(-2 * d * b_halfspan, 2 * d * b_halfspan + 1):
            b = j * bstep
            if not _lines_match(pure_lines, group_lines, a, b):
                continue
            qb = _q_power_fraction(q, b)
            if qb is None:
                skipped.append((a, b))
                continue
            tried.append((a, b))
            match = _verify_uniformity(pure_completed_u, z, a, b, qb)
            if match is not None:
                return match
    return UniformityNotFound(tuple(tried), tuple(skipped))


def _lines_match(
    pure_lines: list[float], group_lines: list[float], a: Fraction, b: Fraction
) -> bool:
    if not pure_lines or not group_lines:
        return False
    af, bf = float(a), float(b)
    mapped = sorted(af * s + bf for s in pure_lines)
    if len(mapped) != len(group_lines):
        return False
    return all(abs(x - y) < 1e-6 for x, y in zip(mapped, group_lines))


def _verify_uniformity(
    pure_u: RationalFunction,
    z: GroupZetaResult,
    a: Fraction,
    b: Fraction,
    qb: Fraction,
) -> UniformityMatch | None:
    d = a.denominator
    n = a.numerator
    # pure side in v with t = v^d; group side with u = q^{-b} v^{n}
    pure_v = substitute(pure_u, SubstRule.power(1, d, "v"))
    try:
        group_v = substitute(z.zeta, SubstRule.power(qb, n, "v"))
    except DomainError:
        return None
    sample = Fraction(1, 7)
    for _ in range(40):
        try:
            pv = pure_v.evaluate(sample)
            gv = group_v.evaluate(sample)
            if gv != 0:
                break
        except DomainError:
            pass
        sample += Fraction(1, 13)
    else:
        return None
    if pv == 0:
        return None
    cval = pv / gv
    if group_v.scale(cval) == pure_v:
        return UniformityMatch(a, b, cval, True)
    return None
