"""Sparse multivariate Laurent polynomials and their fractions.

Monomials are integer exponent tuples (negative exponents allowed), one
slot per variable, capped at four variables.  A fraction keeps its
numerator and denominator with shared monomial factors removed and the
denominator scaled so its lexicographically-leading coefficient is 1.
Full multivariate gcd is deliberately not attempted; equality is decided
by cross-multiplication, which is all the residue computations need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .algebra import Poly, RationalFunction, Rat, _frac
from .errors import CapabilityError, DomainError

MAX_VARS = 4

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse Laurent polynomial: exponent tuple -> nonzero Fraction."""

    nvars: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    @staticmethod
    def make(nvars: int, terms: Mapping[Monomial, Rat]) -> "LaurentPoly":
        if not 1 <= nvars <= MAX_VARS:
            raise CapabilityError(f"supported variable counts are 1..{MAX_VARS}")
        clean = {}
        for mono, c in terms.items():
            c = _frac(c)
            if len(mono) != nvars:
                raise DomainError("monomial arity mismatch")
            if c != 0:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + c
        items = tuple(sorted((m, c) for m, c in clean.items() if c != 0))
        return LaurentPoly(nvars, items)

    @staticmethod
    def const(nvars: int, c: Rat) -> "LaurentPoly":
        return LaurentPoly.make(nvars, {(0,) * nvars: c})

    @staticmethod
    def var(nvars: int, j: int, power: int = 1) -> "LaurentPoly":
        mono = [0] * nvars
        mono[j] = power
        return LaurentPoly.make(nvars, {tuple(mono): 1})

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.as_dict()
        for m, c in other.terms:
            out[m] = out.get(m, Fraction(0)) + c
        return LaurentPoly.make(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return LaurentPoly.make(self.nvars, out)

    def scale(self, c: Rat) -> "LaurentPoly":
        c = _frac(c)
        if c == 0:
            return LaurentPoly.make(self.nvars, {})
        return LaurentPoly(self.nvars, tuple((m, k * c) for m, k in self.terms))

    def mul_monomial(self, mono: Monomial, c: Rat = 1) -> "LaurentPoly":
        c = _frac(c)
        return LaurentPoly.make(
            self.nvars,
            {
                tuple(a + b for a, b in zip(m, mono)): k * c
                for m, k in self.terms
            },
        )

    def leading_coeff(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[-1][1]

    def degree_in(self, j: int) -> tuple[int, int]:
        """(min, max) exponent of variable j; (0, 0) for the zero poly."""
        if not self.terms:
            return (0, 0)
        es = [m[j] for m, _ in self.terms]
        return (min(es), max(es))

    def uses_var(self, j: int) -> bool:
        return any(m[j] != 0 for m, _ in self.terms)

    def derivative(self, j: int) -> "LaurentPoly":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms:
            e = m[j]
            if e == 0:
                continue
            m2 = list(m)
            m2[j] = e - 1
            m2 = tuple(m2)
            out[m2] = out.get(m2, Fraction(0)) + c * e
        return LaurentPoly.make(self.nvars, out)

    def eval_var(self, j: int, value: Rat) -> "LaurentPoly":
        """Substitute a nonzero rational for variable j."""
        value = _frac(value)
        if value == 0:
            raise DomainError("Laurent substitution needs a nonzero value")
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms:
            m2 = list(m)
            e = m2[j]
            m2[j] = 0
            m2 = tuple(m2)
            out[m2] = out.get(m2, Fraction(0)) + c * value**e
        return LaurentPoly.make(self.nvars, out)

    def divide_linear_at_one(self, j: int) -> "LaurentPoly | None":
        """Exact quotient by (x_j - 1), or None when not divisible."""
        lo, _ = self.degree_in(j)
        shifted = self.mul_monomial(
            tuple(-lo if k == j else 0 for k in range(self.nvars))
        )
        # synthetic division by (x_j - 1) on the x_j-graded pieces
        pieces: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in shifted.terms:
            e = m[j]
            rest = tuple(0 if k == j else v for k, v in enumerate(m))
            pieces.setdefault(e, {})[rest] = c
        if not pieces:
            return LaurentPoly.make(self.nvars, {})
        top = max(pieces)
        carry: dict[Monomial, Fraction] = {}
        quot: dict[Monomial, Fraction] = {}
        for e in range(top, 0, -1):
            coeff = dict(carry)
            for rest, c in pieces.get(e, {}).items():
                coeff[rest] = coeff.get(rest, Fraction(0)) + c
            coeff = {m: c for m, c in coeff.items() if c != 0}
            for rest, c in coeff.items():
                m = list(rest)
                m[j] = e - 1
                quot[tuple(m)] = c
            carry = coeff
        rem = dict(carry)
        for rest, c in pieces.get(0, {}).items():
            rem[rest] = rem.get(rest, Fraction(0)) + c
        if any(c != 0 for c in rem.values()):
            return None
        return LaurentPoly.make(self.nvars, quot).mul_monomial(
            tuple(lo if k == j else 0 for k in range(self.nvars))
        )

    def to_univariate(self, j: int) -> tuple[Poly, int]:
        """Express as x_j^shift * poly(x_j); requires support only on x_j."""
        for k in range(self.nvars):
            if k != j and self.uses_var(k):
                raise DomainError("Laurent polynomial is not univariate")
        if not self.terms:
            return Poly.zero(), 0
        lo, hi = self.degree_in(j)
        coeffs = [Fraction(0)] * (hi - lo + 1)
        for m, c in self.terms:
            coeffs[m[j] - lo] = c
        return Poly.from_list(coeffs), lo


@dataclass(frozen=True)
class MultiRationalFunction:
    """Fraction of sparse Laurent polynomials in up to four variables."""

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def make(num: LaurentPoly, den: LaurentPoly) -> "MultiRationalFunction":
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            return MultiRationalFunction(
                LaurentPoly.make(num.nvars, {}),
                LaurentPoly.const(num.nvars, 1),
            )
        # strip shared monomial content: align minimal exponents to zero
        shift = []
        for j in range(num.nvars):
            lo_n, _ = num.degree_in(j)
            lo_d, _ = den.degree_in(j)
            shift.append(-min(lo_n, lo_d))
        shift_t = tuple(shift)
        num = num.mul_monomial(shift_t)
        den = den.mul_monomial(shift_t)
        lc = den.leading_coeff()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return MultiRationalFunction(num, den)

    @staticmethod
    def const(nvars: int, c: Rat) -> "MultiRationalFunction":
        return MultiRationalFunction.make(
            LaurentPoly.const(nvars, c), LaurentPoly.const(nvars, 1)
        )

    @staticmethod
    def from_poly(p: LaurentPoly) -> "MultiRationalFunction":
        return MultiRationalFunction.make(p, LaurentPoly.const(p.nvars, 1))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "MultiRationalFunction") -> "MultiRationalFunction":
        return MultiRationalFunction.make(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __neg__(self) -> "MultiRationalFunction":
        return MultiRationalFunction(-self.num, self.den)

    def __sub__(self, other: "MultiRationalFunction") -> "MultiRationalFunction":
        return self + (-other)

    def __mul__(self, other: "MultiRationalFunction") -> "MultiRationalFunction":
        return MultiRationalFunction.make(
            self.num * other.num, self.den * other.den
        )

    def __truediv__(self, other: "MultiRationalFunction") -> "MultiRationalFunction":
        if other.is_zero():
            raise DomainError("division by zero function")
        return MultiRationalFunction.make(
            self.num * other.den, self.den * other.num
        )

    def equal(self, other: "MultiRationalFunction") -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()

    def eval_var(self, j: int, value: Rat) -> "MultiRationalFunction":
        den = self.den.eval_var(j, value)
        if den.is_zero():
            raise DomainError(f"substitution at a pole of variable {j}")
        return MultiRationalFunction.make(self.num.eval_var(j, value), den)

    def evaluate(self, values: Iterable[Rat]) -> Fraction:
        f = self
        for j, v in enumerate(values):
            f = f.eval_var(j, v)
        num, _ = f.num.to_univariate(0)
        den, _ = f.den.to_univariate(0)
        return num[0] / den[0]

    def to_univariate(self, j: int, var: str = "u") -> RationalFunction:
        """Collapse to a univariate rational function in variable j."""
        num, sn = self.num.to_univariate(j)
        den, sd = self.den.to_univariate(j)
        f = RationalFunction.make(num, den, var)
        return f.mul_monomial(sn - sd)


def _taylor_coeffs_at_one(
    p: LaurentPoly, j: int, upto: int
) -> list[LaurentPoly]:
    """Coefficients of (x_j - 1)^0..upto of p, which must be x_j-polynomial."""
    lo, _ = p.degree_in(j)
    if lo < 0:
        raise DomainError("Taylor shift requires nonnegative x_j exponents")
    out = [dict() for _ in range(upto + 1)]
    for mono, c in p.terms:
        e = mono[j]
        rest = tuple(0 if k == j else v for k, v in enumerate(mono))
        binom = 1
        for i in range(0, min(e, upto) + 1):
            out[i][rest] = out[i].get(rest, Fraction(0)) + c * binom
            binom = binom * (e - i) // (i + 1)
    return [LaurentPoly.make(p.nvars, d) for d in out]


def residue_at_one(f: MultiRationalFunction, j: int) -> MultiRationalFunction:
    """The operator -Res_{x_j=1}[f / x_j].

    The pole order m at x_j = 1 is found by exact division of (x_j - 1)
    powers out of the denominator; the (m-1)-st Laurent coefficient is
    then extracted by an exact Taylor shift and series quotient.
    Returns the zero function when f is regular there.
    """
    n = f.nvars
    num = f.num.mul_monomial(tuple(-1 if k == j else 0 for k in range(n)))
    den = f.den
    order = 0
    while True:
        q = den.divide_linear_at_one(j)
        if q is None:
            break
        den = q
        order += 1
    if order == 0:
        return MultiRationalFunction.const(n, 0)
    # clear negative x_j powers with a common monomial, leaving f unchanged
    lo = min(num.degree_in(j)[0], den.degree_in(j)[0], 0)
    if lo < 0:
        clear = tuple(-lo if k == j else 0 for k in range(n))
        num = num.mul_monomial(clear)
        den = den.mul_monomial(clear)
    a = _taylor_coeffs_at_one(num, j, order - 1)
    e = _taylor_coeffs_at_one(den, j, order - 1)
    if e[0].is_zero():
        raise DomainError("residue regularization failed")
    e0 = MultiRationalFunction.from_poly(e[0])
    coeffs: list[MultiRationalFunction] = []
    for m in range(order):
        acc = MultiRationalFunction.from_poly(a[m])
        for i in range(1, m + 1):
            acc = acc - MultiRationalFunction.from_poly(e[i]) * coeffs[m - i]
        coeffs.append(acc / e0)
    return -coeffs[order - 1]
