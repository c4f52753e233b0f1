"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a polynomial coefficient")


def format_rational(c: Scalar) -> str:
    """Render an exact rational as ``p/q``, omitting ``/1``."""
    c = _frac(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class Poly:
    """Polynomial in one formal variable, coefficients stored by exponent.

    Instances are immutable; the coefficient tuple never carries trailing
    zeros, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Poly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return cls.constant(other)

    # -- basic accessors --------------------------------------------------

    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c != 0) == 1

    def valuation(self) -> int:
        """Smallest exponent with a nonzero coefficient (``-1`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._raw([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Poly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        lead_inv = 1 / other.leading()
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * lead_inv
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * bc[j]
        return Poly._raw(quot), Poly._raw(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Quotient of a division known to be exact; raises if it is not."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division left a nonzero remainder")
        return q

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- evaluation and transforms ---------------------------------------

    def __call__(self, x):
        """Horner evaluation at any value supporting ``+`` and ``*``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> "Poly":
        """Substitute ``x -> x**k``."""
        out = [Fraction(0)] * (k * self.degree() + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly._raw(out)

    def scale_var(self, s: Scalar) -> "Poly":
        """Substitute ``x -> s*x``."""
        s = _frac(s)
        out, p = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * p)
            p *= s
        return Poly._raw(out)

    def reverse(self, n: int | None = None) -> "Poly":
        """Return ``x**n * p(1/x)`` with ``n`` defaulting to the degree."""
        if n is None:
            n = self.degree()
        if self.degree() > n:
            raise ValueError("reversal length below degree")
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` integer-primitive."""
        if self.is_zero():
            return Fraction(0)
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        num = reduce(gcd, (c.numerator for c in self.coeffs), 0)
        return Fraction(abs(num), den)

    def primitive(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.content())

    def derivative(self) -> "Poly":
        return Poly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def format(self, var: str = "q") -> str:
        """Ascending-power rendering such as ``1 + 2*q - 1/2*q^3``."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.format('x')})"

    __str__ = __repr__


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; ``gcd(0, 0) == 0``."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_from_roots_of_unity_factors(factors: Iterable[tuple[int, int, int]]) -> Poly:
    """Product of ``(1 + sign*x**r)**e`` over ``(sign, r, e)`` triples."""
    out = Poly.constant(1)
    for sign, r, e in factors:
        out = out * (Poly.constant(1) + Poly.monomial(r, sign)) ** e
    return out
