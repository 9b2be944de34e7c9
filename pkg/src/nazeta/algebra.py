"""Exact univariate arithmetic: polynomials and reduced rational functions.

Scalars are ``fractions.Fraction`` throughout.  A polynomial is a dense
tuple of coefficients indexed by degree, trailing zeros stripped, so the
zero polynomial is the empty tuple.  A rational function is a reduced
pair of polynomials with the denominator normalized to leading
coefficient 1; that makes equality of values a plain structural
comparison.

Everything here is immutable and side-effect free.  The only
floating-point code in the module is ``poly_complex_roots``, which backs
the numeric Riemann-Hypothesis reports; every identity check elsewhere
stays in exact rationals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import BoundError, DomainError, NumericError

Rat = Union[Fraction, int]

# Hard cap on exponents produced by monomial substitutions.
_DEGREE_BOUND = 100_000


def _frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over Fraction, index = degree."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs: Rat) -> "Poly":
        return Poly.from_list(coeffs)

    @staticmethod
    def from_list(coeffs: Iterable[Rat]) -> "Poly":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((Fraction(1),))

    @staticmethod
    def constant(c: Rat) -> "Poly":
        return Poly.from_list([c])

    @staticmethod
    def monomial(degree: int, c: Rat = 1) -> "Poly":
        if degree < 0:
            raise DomainError("monomial degree must be >= 0")
        return Poly.from_list([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly.from_list(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_list(out)

    def scale(self, c: Rat) -> "Poly":
        c = _frac(c)
        if c == 0:
            return Poly.zero()
        return Poly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly.from_list(quot), Poly.from_list(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise DomainError("inexact polynomial division")
        return q

    def evaluate(self, x: Rat) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly.from_list([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, a: Rat) -> "Poly":
        """Return p(x + a), expanded by synthetic Taylor division."""
        a = _frac(a)
        cs = list(self.coeffs)
        n = len(cs)
        out = []
        for _ in range(n):
            # repeated synthetic division by (x - (-a)) collects Taylor coeffs
            rem = Fraction(0)
            for i in range(n - 1, -1, -1):
                rem = cs[i] + a * rem
                cs[i] = rem
            out.append(cs[0])
            cs = cs[1:]
            n -= 1
        return Poly.from_list(out)

    def compose_monomial(self, c: Rat, d: int) -> "Poly":
        """Return p(c * x^d) for d >= 1."""
        if d < 1:
            raise DomainError("compose_monomial requires d >= 1")
        if d * max(self.degree, 0) > _DEGREE_BOUND:
            raise BoundError("substitution exponent bound exceeded")
        c = _frac(c)
        out = [Fraction(0)] * (self.degree * d + 1 if self.coeffs else 0)
        ci = Fraction(1)
        for i, a in enumerate(self.coeffs):
            out[i * d] += a * ci
            ci *= c
        return Poly.from_list(out)

    def reversed_coeffs(self, upto: int) -> "Poly":
        """Return x^upto * p(1/x); requires upto >= degree."""
        if upto < self.degree:
            raise DomainError("reversal length below degree")
        out = [Fraction(0)] * (upto + 1)
        for i, a in enumerate(self.coeffs):
            out[upto - i] = a
        return Poly.from_list(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


def _int_content(ints: Sequence[int]) -> int:
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
        if g == 1:
            return 1
    return g or 1


def _to_int_poly(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = _int_content(ints)
    return [v // g for v in ints]


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists, content-stripped."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        g = math.gcd(la, lb)
        ml, mb = lb // g, la // g
        shift = len(a) - len(b)
        a = [c * ml for c in a]
        for j, v in enumerate(b):
            a[shift + j] -= mb * v
        while a and a[-1] == 0:
            a.pop()
    g = _int_content(a)
    return [v // g for v in a] if a else []


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd, computed by a primitive remainder sequence over Z."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        x, y = _to_int_poly(a), _to_int_poly(b)
        if len(x) < len(y):
            x, y = y, x
        while y:
            x, y = y, _int_prem(x, y)
        g = Poly.from_list(x)
    if g.is_zero():
        return g
    return g.scale(1 / g.leading())


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

VARIABLES = ("u", "T", "t", "v")


@dataclass(frozen=True)
class RationalFunction:
    """Reduced ratio of polynomials in a single tagged variable.

    The denominator has leading coefficient 1 and shares no factor with
    the numerator, so ``==`` decides equality of the underlying
    functions.
    """

    num: Poly
    den: Poly
    var: str = "u"

    @staticmethod
    def make(num: Poly, den: Poly, var: str = "u") -> "RationalFunction":
        if var not in VARIABLES:
            raise DomainError(f"unknown variable tag {var!r}")
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            return RationalFunction(Poly.zero(), Poly.one(), var)
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return RationalFunction(num, den, var)

    @staticmethod
    def from_poly(p: Poly, var: str = "u") -> "RationalFunction":
        return RationalFunction.make(p, Poly.one(), var)

    @staticmethod
    def const(c: Rat, var: str = "u") -> "RationalFunction":
        return RationalFunction.make(Poly.constant(c), Poly.one(), var)

    @staticmethod
    def variable(var: str = "u") -> "RationalFunction":
        return RationalFunction.make(Poly.monomial(1), Poly.one(), var)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError("rational function is not constant")
        if self.num.is_zero():
            return Fraction(0)
        return self.num[0] / self.den[0]

    def _check(self, other: "RationalFunction") -> None:
        if self.var != other.var:
            raise DomainError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        return RationalFunction.make(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.var,
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, self.var)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        # cross-reduce before multiplying to keep intermediate degrees down
        a = RationalFunction.make(self.num, other.den, self.var)
        b = RationalFunction.make(other.num, self.den, self.var)
        return RationalFunction(
            a.num * b.num, a.den * b.den, self.var
        )._renormalize()

    def _renormalize(self) -> "RationalFunction":
        lc = self.den.leading()
        if lc == 1:
            return self
        return RationalFunction(
            self.num.scale(1 / lc), self.den.scale(1 / lc), self.var
        )

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if other.is_zero():
            raise DomainError("division by the zero function")
        return self * RationalFunction.make(other.den, other.num, self.var)

    def scale(self, c: Rat) -> "RationalFunction":
        return RationalFunction(self.num.scale(c), self.den, self.var)

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return (RationalFunction.const(1, self.var) / self) ** (-n)
        result = RationalFunction.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, k: int) -> "RationalFunction":
        """Multiply by var^k, any integer k."""
        if k >= 0:
            return RationalFunction.make(
                self.num * Poly.monomial(k), self.den, self.var
            )
        return RationalFunction.make(
            self.num, self.den * Poly.monomial(-k), self.var
        )

    def evaluate(self, x: Rat) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise PoleEvaluation(f"evaluation at a pole x={x}")
        return self.num.evaluate(x) / d

    def retag(self, var: str) -> "RationalFunction":
        if var not in VARIABLES:
            raise DomainError(f"unknown variable tag {var!r}")
        return RationalFunction(self.num, self.den, var)

    def series(self, order: int) -> list[Fraction]:
        """Power-series coefficients c_0..c_order; needs den(0) != 0."""
        if self.den[0] == 0:
            raise DomainError("series expansion at a pole of the function")
        d0 = self.den[0]
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = self.num[k]
            for j in range(1, k + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc / d0)
        return out

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


class PoleEvaluation(DomainError):
    pass


# ---------------------------------------------------------------------------
# Substitution rules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubstRule:
    """Monomial substitution x -> c/x, x -> c*x, or x -> c*v^d."""

    kind: str  # "recip" | "scale" | "power"
    c: Fraction
    d: int = 1
    new_var: str | None = None

    @staticmethod
    def reciprocal(c: Rat) -> "SubstRule":
        return SubstRule("recip", _frac(c))

    @staticmethod
    def scaling(c: Rat) -> "SubstRule":
        return SubstRule("scale", _frac(c))

    @staticmethod
    def power(c: Rat, d: int, new_var: str = "v") -> "SubstRule":
        return SubstRule("power", _frac(c), d, new_var)


def substitute(f: RationalFunction, rule: SubstRule) -> RationalFunction:
    """Apply a monomial substitution to the variable of ``f``.

    The result is reduced; composing two substitutions agrees with
    substituting their composition.
    """
    if rule.c == 0:
        raise DomainError("substitution constant must be nonzero")
    if rule.kind == "scale":
        return RationalFunction.make(
            f.num.compose_monomial(rule.c, 1),
            f.den.compose_monomial(rule.c, 1),
            f.var,
        )
    if rule.kind == "recip":
        # x^m * p(c/x) has coefficient p_{m-i} c^{m-i} at x^i
        m = max(f.num.degree, f.den.degree, 0)
        num = Poly.from_list(
            [f.num[m - i] * rule.c ** (m - i) for i in range(m + 1)]
        )
        den = Poly.from_list(
            [f.den[m - i] * rule.c ** (m - i) for i in range(m + 1)]
        )
        return RationalFunction.make(num, den, f.var)
    if rule.kind == "power":
        var = rule.new_var or "v"
        if rule.d == 0:
            raise DomainError("power substitution requires d != 0")
        if rule.d > 0:
            return RationalFunction.make(
                f.num.compose_monomial(rule.c, rule.d),
                f.den.compose_monomial(rule.c, rule.d),
                var,
            )
        d = -rule.d
        m = max(f.num.degree, f.den.degree, 0)
        if d * m > _DEGREE_BOUND:
            raise BoundError("substitution exponent bound exceeded")
        # clear x^(-d) by multiplying both parts with x^(d*m)
        num = _laurent_power_sub(f.num, rule.c, d, m)
        den = _laurent_power_sub(f.den, rule.c, d, m)
        return RationalFunction.make(num, den, var)
    raise DomainError(f"unknown substitution kind {rule.kind!r}")


def _laurent_power_sub(p: Poly, c: Fraction, d: int, m: int) -> Poly:
    # p(c * x^(-d)) * x^(d*m): term a_i c^i x^(d*(m-i))
    out = [Fraction(0)] * (d * m + 1)
    ci = Fraction(1)
    for i, a in enumerate(p.coeffs):
        out[d * (m - i)] += a * ci
        ci *= c
    return Poly.from_list(out)


# ---------------------------------------------------------------------------
# Logarithmic series
# ---------------------------------------------------------------------------


def series_log_coefficients(f: RationalFunction, order: int) -> list[Fraction]:
    """Coefficients c_1..c_order of log f, for f with f(0) = 1.

    Computed from the series of f by the convolution recurrence
    m*a_m = sum_{j<=m} j*c_j*a_{m-j}, all in exact rationals, so
    exp(sum c_m x^m) reproduces f through the requested order.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    a = f.series(order)
    if a[0] != 1:
        raise DomainError("log series requires f(0) = 1")
    cs: list[Fraction] = []
    for m in range(1, order + 1):
        acc = a[m]
        for j in range(1, m):
            acc -= Fraction(j, m) * cs[j - 1] * a[m - j]
        cs.append(acc)
    return cs


def series_exp(cs: Sequence[Fraction], order: int) -> list[Fraction]:
    """Series of exp(sum_{m>=1} c_m x^m) through x^order; test oracle."""
    out = [Fraction(1)] + [Fraction(0)] * order
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            cj = cs[j - 1] if j - 1 < len(cs) else Fraction(0)
            acc += j * cj * out[m - j]
        out[m] = acc / m
    return out


# ---------------------------------------------------------------------------
# Complex roots
# ---------------------------------------------------------------------------


def _aberth(coeffs: list[complex], tol: float, max_iter: int = 400):
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]

    def p(z: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    def dp(z: complex) -> complex:
        acc = 0j
        for i in range(n, 0, -1):
            acc = acc * z + i * monic[i]
        return acc

    radius = 1.0 + max(abs(c) for c in monic[:-1]) if n else 1.0
    zs = [
        radius * cmath.exp(2j * cmath.pi * (k + 0.35) / n + 0.4j)
        for k in range(n)
    ]
    for _ in range(max_iter):
        moved = 0.0
        for i in range(n):
            pi = p(zs[i])
            di = dp(zs[i])
            if di == 0:
                zs[i] += (1e-8 + 1e-8j)
                moved = math.inf
                continue
            ratio = pi / di
            s = sum(
                1.0 / (zs[i] - zs[j]) for j in range(n) if j != i and zs[i] != zs[j]
            )
            denom = 1.0 - ratio * s
            step = ratio / denom if denom != 0 else ratio
            zs[i] -= step
            moved = max(moved, abs(step) / (1.0 + abs(zs[i])))
        if moved < 1e-15:
            break
    return zs


def _root_scale(p: Poly, z: complex) -> float:
    return sum(abs(float(c)) * abs(z) ** i for i, c in enumerate(p.coeffs))


def poly_complex_roots(
    p: Poly, tol: float = 1e-9
) -> list[tuple[complex, int]]:
    """All complex roots with multiplicities, by Aberth iteration.

    Falls back to the companion-matrix eigenvalues when the simultaneous
    iteration stalls.  Each returned root z satisfies
    |p(z)| <= tol * sum_i |p_i| |z|^i, and for real input the list is
    conjugate-symmetric.  Raises NumericError (with partial results
    attached) if neither method meets the residual bound.
    """
    if p.is_zero() or p.degree < 1:
        raise DomainError("root finding needs a nonzero, nonconstant polynomial")
    # split off exact roots at the origin
    low = 0
    while p.coeffs[low] == 0:
        low += 1
    roots: list[complex] = [0j] * low
    reduced = Poly(tuple(p.coeffs[low:]))
    if reduced.degree >= 1:
        coeffs = [complex(c) for c in reduced.coeffs]
        zs = _aberth(coeffs, tol)
        if not _residuals_ok(reduced, zs, tol):
            zs = _companion_roots(reduced)
            if not _residuals_ok(reduced, zs, tol):
                raise NumericError(
                    "root refinement did not reach the residual bound",
                    partial=zs,
                )
        roots.extend(zs)
    # coefficients are rational, hence real: enforce conjugate symmetry
    roots = _symmetrize_conjugates(roots, tol)
    return _cluster(roots, tol)


def _companion_roots(p: Poly) -> list[complex]:
    import numpy as np

    cs = [float(c) for c in p.coeffs]
    return [complex(z) for z in np.roots(list(reversed(cs)))]


def _residuals_ok(p: Poly, zs: Iterable[complex], tol: float) -> bool:
    for z in zs:
        bound = tol * max(_root_scale(p, z), 1e-300)
        if abs(p.evaluate_complex(z)) > bound:
            return False
    return True


def _symmetrize_conjugates(roots: list[complex], tol: float) -> list[complex]:
    eps = max(tol, 1e-12)
    out: list[complex] = []
    pool = list(roots)
    while pool:
        z = pool.pop()
        if abs(z.imag) <= eps * (1.0 + abs(z)):
            out.append(complex(z.real, 0.0))
            continue
        best, dist = None, math.inf
        for i, w in enumerate(pool):
            d = abs(w - z.conjugate())
            if d < dist:
                best, dist = i, d
        if best is not None and dist <= 1e-6 * (1.0 + abs(z)):
            w = pool.pop(best)
            mean = (z + w.conjugate()) / 2
            out.extend([mean, mean.conjugate()])
        else:
            out.append(z)
    return out


def _cluster(roots: list[complex], tol: float) -> list[tuple[complex, int]]:
    radius = max(tol, 1e-7)
    groups: list[list[complex]] = []
    for z in sorted(roots, key=lambda w: (w.real, w.imag)):
        for g in groups:
            if abs(g[0] - z) <= radius * (1.0 + abs(z)) * 10:
                g.append(z)
                break
        else:
            groups.append([z])
    out = []
    for g in groups:
        center = sum(g) / len(g)
        out.append((center, len(g)))
    return out
