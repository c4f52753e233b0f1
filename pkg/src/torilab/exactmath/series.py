"""Truncated formal power series over an arbitrary commutative ring.

The coefficient ring is duck-typed: elements must support ``+``, ``-``,
``*`` and ``==`` among themselves and with Python ``int`` (which supplies
zero and one).  Division needs ``1 / c0`` for the constant term;
:func:`series_exp` and generalized binomials need multiplication by
:class:`fractions.Fraction`.  ``int``, ``Fraction``, ``RationalFunction``,
``CharacterPolynomial`` and ``TruncatedSeries`` itself all qualify, which
is how nested (bivariate) series are built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence


def _is_zero(c) -> bool:
    return c == 0


def _invert(c):
    if isinstance(c, int):
        if c == 0:
            raise ZeroDivisionError("series constant term is not invertible")
        return Fraction(1, c)
    if isinstance(c, Fraction):
        if c == 0:
            raise ZeroDivisionError("series constant term is not invertible")
        return 1 / c
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c


class TruncatedSeries:
    """Power series known exactly for exponents ``0..order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Any], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.coeffs: tuple = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, c, order: int) -> "TruncatedSeries":
        if k > order:
            return cls([], order)
        return cls([0] * k + [c], order)

    def __getitem__(self, n: int):
        return self.coefficient(n)

    def coefficient(self, n: int):
        """``[u^n]`` of the series; asking past the order is an error."""
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient {n} requested beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def map(self, f: Callable) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], self.order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``u**k``."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    # -- arithmetic ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if _is_zero(other):
                return TruncatedSeries([], self.order)
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        return series_mul(self, other)

    def __rmul__(self, other):
        if _is_zero(other):
            return TruncatedSeries([], self.order)
        return TruncatedSeries([other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        inv = _invert(other)
        return TruncatedSeries([c * inv for c in self.coeffs], self.order)

    def __rtruediv__(self, other):
        return series_div(self._lift(other), self)

    def inverse(self) -> "TruncatedSeries":
        return series_div(TruncatedSeries.one(self.order), self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("integer exponent required; use series_pow_binomial for ring exponents")
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(_is_zero(c) for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    out: list = [0] * (n + 1)
    ac, bc = a.coeffs, b.coeffs
    for i in range(n + 1):
        x = ac[i]
        if _is_zero(x):
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if _is_zero(y):
                continue
            out[i + j] = out[i + j] + x * y
    return TruncatedSeries(out, n)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """``a / b``; the constant term of ``b`` must be a unit of the ring."""
    n = min(a.order, b.order)
    inv0 = _invert(b.coeffs[0])
    out: list = []
    bc = b.coeffs
    for k in range(n + 1):
        acc = a.coeffs[k]
        for j in range(1, k + 1):
            if _is_zero(bc[j]) or _is_zero(out[k - j]):
                continue
            acc = acc - bc[j] * out[k - j]
        out.append(acc * inv0 if not _is_zero(acc) else 0)
    return TruncatedSeries(out, n)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for ``a`` with zero constant term, via ``E' = a' E``."""
    if not _is_zero(a.coeffs[0]):
        raise ValueError("series_exp needs a zero constant term")
    n = a.order
    e: list = [1]
    for m in range(1, n + 1):
        acc = 0
        for k in range(1, m + 1):
            if _is_zero(a.coeffs[k]) or _is_zero(e[m - k]):
                continue
            acc = acc + a.coeffs[k] * e[m - k] * Fraction(k, m)
        e.append(acc)
    return TruncatedSeries(e, n)


def generalized_binomial(e, j: int):
    """``e (e-1) ... (e-j+1) / j!`` for a ring element (or integer) ``e``."""
    acc = 1
    for i in range(j):
        acc = acc * (e - i) * Fraction(1, i + 1)
    return acc


def series_pow_binomial(base_sign: int, k: int, exponent, order: int) -> TruncatedSeries:
    """``(1 + base_sign * t**k) ** exponent`` truncated at ``order``.

    ``exponent`` may be any ring element (generalized binomial series) or a
    nonnegative integer, in which case the expansion is the finite product.
    """
    if base_sign not in (1, -1):
        raise ValueError("base_sign must be +1 or -1")
    if k < 1:
        raise ValueError("k must be positive")
    out: list = [0] * (order + 1)
    b = 1
    j = 0
    while j * k <= order:
        if j:
            b = b * (exponent - (j - 1)) * Fraction(1, j)
        if isinstance(exponent, int) and exponent >= 0 and j > exponent:
            break
        out[j * k] = b if (base_sign == 1 or j % 2 == 0) else -b
        j += 1
    return TruncatedSeries(out, order)


def series_coefficient(s: TruncatedSeries, n: int):
    return s.coefficient(n)


def series_from_rational(num: Sequence, den: Sequence, order: int) -> TruncatedSeries:
    """Expand ``num/den`` (coefficient sequences, ascending) to ``order``."""
    return series_div(TruncatedSeries(num, order), TruncatedSeries(den, order))
