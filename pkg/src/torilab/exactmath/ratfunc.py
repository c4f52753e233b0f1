"""Reduced rational functions in one variable over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .poly import Poly, format_rational, poly_gcd


class RationalFunction:
    """Canonical ratio ``num/den`` of polynomials.

    Canonical form: ``gcd(num, den) == 1``, both integer-coefficient and
    jointly primitive, ``den`` with positive leading coefficient.  Equality
    is therefore a field-by-field comparison.  ``var`` only affects
    rendering.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: str = "q"):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        self.var = var
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _trusted(cls, num: Poly, den: Poly, var: str) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den, r.var = num, den, var
        return r

    @classmethod
    def variable(cls, var: str = "q") -> "RationalFunction":
        return cls(Poly.x(), 1, var)

    @classmethod
    def coerce(cls, other, var: str = "q") -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return cls(Poly.coerce(other), 1, var)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num * (1 / self.den.leading())

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.coerce(other, self.var)
        elif not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den, self.var)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._trusted(-self.num, self.den, self.var)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunction)):
            return self + (-RationalFunction.coerce(other, self.var))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(0, 1, self.var)
            return RationalFunction(self.num * other, self.den, self.var)
        if isinstance(other, Poly):
            other = RationalFunction(other, 1, self.var)
        elif not isinstance(other, RationalFunction):
            return NotImplemented
        # cross-cancel before multiplying keeps the gcd work small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = (self.num // g1, other.den // g1) if g1.degree() > 0 else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2.degree() > 0 else (other.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.den, self.num, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.coerce(other, self.var)
        elif not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other, self.var) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("integer exponent required")
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._trusted(self.num ** e, self.den ** e, self.var)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.coerce(other, self.var)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        """Evaluate at an exact value; raises on a pole."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of rational function at {x}")
        n = self.num(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def degree_gap(self) -> int:
        """``deg(num) - deg(den)``; negative means it vanishes at infinity."""
        if self.is_zero():
            return -(10**9)
        return self.num.degree() - self.den.degree()

    def format(self) -> str:
        v = self.var
        if self.den == Poly.constant(1):
            return self.num.format(v)
        if self.den.is_constant():
            return f"({self.num.format(v)})/{format_rational(self.den.leading())}"
        return f"({self.num.format(v)})/({self.den.format(v)})"

    def to_json(self) -> dict:
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    def __repr__(self):
        return f"RationalFunction({self.format()})"

    __str__ = format


def _canonical(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly.constant(1)
    if den.degree() > 0:
        # factor out powers of the variable first; many denominators here are monomials
        v = min(num.valuation(), den.valuation())
        if v:
            num = Poly(num.coeffs[v:])
            den = Poly(den.coeffs[v:])
        if den.degree() > 0:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num // g, den // g
    dl = reduce(lcm, (c.denominator for c in num.coeffs + den.coeffs), 1)
    nums = [c * dl for c in num.coeffs + den.coeffs]
    g = reduce(gcd, (c.numerator for c in nums), 0)
    scale = Fraction(dl, g)
    if den.leading() < 0:
        scale = -scale
    return num * scale, den * scale


def ratfun_normalize(num, den) -> RationalFunction:
    return RationalFunction(num, den)
