"""Character polynomials in the cycle-counting functions X_r and Y_r.

``X_r`` counts positive r-cycles of a signed permutation and ``Y_r``
negative ones; a polynomial without any ``Y`` is a type-A character
polynomial (``X_r`` counting r-cycles of a permutation).  Storage is a
sparse map from monomial signatures to exact rationals.  A signature is a
tuple of ``(r, a_r, b_r)`` triples, sorted by ``r``, standing for
``prod_r X_r**a_r * Y_r**b_r``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Mapping, Union

from .exactmath import format_rational
from .partitions import EMPTY, DoublePartition, Partition

Signature = tuple[tuple[int, int, int], ...]
ClassLabel = Union[DoublePartition, Partition]

ONE_SIG: Signature = ()


def _sig_mul(s: Signature, t: Signature) -> Signature:
    if not s:
        return t
    if not t:
        return s
    acc: dict[int, list[int]] = {}
    for r, a, b in s + t:
        cur = acc.setdefault(r, [0, 0])
        cur[0] += a
        cur[1] += b
    return tuple((r, a, b) for r, (a, b) in sorted(acc.items()))


def _sig_degree(s: Signature) -> int:
    return sum(r * (a + b) for r, a, b in s)


class CharacterPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Signature, Fraction] | None = None):
        self.terms: dict[Signature, Fraction] = {}
        for sig, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                norm = tuple(sorted((r, a, b) for r, a, b in sig if a or b))
                self.terms[norm] = self.terms.get(norm, Fraction(0)) + c
        self.terms = {s: c for s, c in self.terms.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict[Signature, Fraction]) -> "CharacterPolynomial":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def constant(cls, c) -> "CharacterPolynomial":
        return cls({ONE_SIG: Fraction(c)})

    @classmethod
    def X(cls, r: int) -> "CharacterPolynomial":
        return cls({((r, 1, 0),): Fraction(1)})

    @classmethod
    def Y(cls, r: int) -> "CharacterPolynomial":
        return cls({((r, 0, 1),): Fraction(1)})

    @classmethod
    def coerce(cls, other) -> "CharacterPolynomial":
        if isinstance(other, CharacterPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to a character polynomial")

    # -- structure -------------------------------------------------------

    def degree(self) -> int:
        """Weighted degree with ``deg X_r = deg Y_r = r``; ``-1`` for zero."""
        if not self.terms:
            return -1
        return max(_sig_degree(s) for s in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_type_a(self) -> bool:
        return all(b == 0 for s in self.terms for _, _, b in s)

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE_SIG, Fraction(0))

    def coefficient(self, sig: Signature) -> Fraction:
        return self.terms.get(sig, Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CharacterPolynomial.constant(other)
        elif not isinstance(other, CharacterPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for s, c in other.terms.items():
            v = out.get(s, 0) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return CharacterPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CharacterPolynomial._raw({s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CharacterPolynomial.constant(other)
        elif not isinstance(other, CharacterPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CharacterPolynomial._raw({})
            return CharacterPolynomial._raw({s: c * other for s, c in self.terms.items()})
        if not isinstance(other, CharacterPolynomial):
            return NotImplemented
        out: dict[Signature, Fraction] = {}
        for s, c in self.terms.items():
            for t, d in other.terms.items():
                u = _sig_mul(s, t)
                out[u] = out.get(u, 0) + c * d
        return CharacterPolynomial._raw({s: c for s, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("nonnegative integer exponent required")
        out = CharacterPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> "CharacterPolynomial":
        """Only nonzero constants are units in this ring."""
        if set(self.terms) != {ONE_SIG}:
            raise ZeroDivisionError("only nonzero constant character polynomials are invertible")
        return CharacterPolynomial.constant(1 / self.terms[ONE_SIG])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CharacterPolynomial.constant(other)
        if not isinstance(other, CharacterPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation ------------------------------------------------------

    def __call__(self, cls: ClassLabel) -> Fraction:
        return evaluate(self, cls)

    def sorted_terms(self) -> list[tuple[Signature, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (_sig_degree(kv[0]), tuple(-v for v in _dense_key(kv[0]))))

    def format(self) -> str:
        """Text form in the ``1/2*X1^2*Y3 - X2`` syntax."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for sig, c in self.sorted_terms():
            factors = []
            for r, a, b in sig:
                for name, e in (("X", a), ("Y", b)):
                    if e:
                        factors.append(f"{name}{r}" + (f"^{e}" if e > 1 else ""))
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"CharacterPolynomial({self.format()!r})"

    __str__ = format


def _dense_key(sig: Signature) -> tuple[int, ...]:
    if not sig:
        return ()
    rmax = sig[-1][0]
    vec = [0] * (2 * rmax)
    for r, a, b in sig:
        vec[2 * (r - 1)] = a
        vec[2 * (r - 1) + 1] = b
    return tuple(vec)


def _multiplicities(cls: ClassLabel) -> tuple[dict[int, int], dict[int, int]]:
    if isinstance(cls, Partition):
        return cls.multiplicities(), {}
    return cls.positive.multiplicities(), cls.negative.multiplicities()


def evaluate(P: CharacterPolynomial, cls: ClassLabel) -> Fraction:
    """Value of ``P`` on a class; a bare partition is a type-A class."""
    xs, ys = _multiplicities(cls)
    total = Fraction(0)
    for sig, c in P.terms.items():
        v = c
        for r, a, b in sig:
            if a:
                v *= xs.get(r, 0) ** a
            if b:
                v *= ys.get(r, 0) ** b
            if not v:
                break
        total += v
    return total


def binom_poly(var: CharacterPolynomial, k: int) -> CharacterPolynomial:
    """``binom(var, k) = var (var-1) ... (var-k+1) / k!``."""
    out = CharacterPolynomial.constant(1)
    for i in range(k):
        out = out * (var - i)
    return out * Fraction(1, factorial(k))


def binom_basis_element(mu: Partition, lam: Partition = EMPTY) -> CharacterPolynomial:
    """``prod_r binom(X_r, n_r(mu)) binom(Y_r, n_r(lam))`` in monomials."""
    out = CharacterPolynomial.constant(1)
    for r, m in mu.multiplicities().items():
        out = out * binom_poly(CharacterPolynomial.X(r), m)
    for r, m in lam.multiplicities().items():
        out = out * binom_poly(CharacterPolynomial.Y(r), m)
    return out


def _sig_to_double_partition(sig: Signature) -> DoublePartition:
    mu, lam = [], []
    for r, a, b in sig:
        mu.extend([r] * a)
        lam.extend([r] * b)
    return DoublePartition(Partition(tuple(mu)), Partition(tuple(lam)))


def _sig_factorials(sig: Signature) -> int:
    out = 1
    for _, a, b in sig:
        out *= factorial(a) * factorial(b)
    return out


def to_binomial_basis(P: CharacterPolynomial) -> dict[DoublePartition, Fraction]:
    """Coefficients ``c`` with ``P = sum c[(mu,lam)] binom(X,mu) binom(Y,lam)``.

    The binomial basis is unitriangular (up to ``a! b!``) against monomials
    ordered lexicographically, so stripping the largest monomial each round
    terminates and is exact.
    """
    rest = CharacterPolynomial._raw(dict(P.terms))
    out: dict[DoublePartition, Fraction] = {}
    while rest.terms:
        width = 2 * max((s[-1][0] for s in rest.terms if s), default=0)
        sig = max(rest.terms, key=lambda s: _dense_key(s) + (0,) * (width - 2 * (s[-1][0] if s else 0)))
        coef = rest.terms[sig] * _sig_factorials(sig)
        dp = _sig_to_double_partition(sig)
        out[dp] = out.get(dp, 0) + coef
        rest = rest - binom_basis_element(dp.positive, dp.negative) * coef
    return {k: v for k, v in sorted(out.items(), key=lambda kv: _basis_sort_key(kv[0])) if v}


def _basis_sort_key(dp: DoublePartition):
    return (dp.size, dp.positive.size, dp.positive.parts, dp.negative.parts)


def from_binomial_basis(coeffs: Mapping[DoublePartition, Fraction]) -> CharacterPolynomial:
    out = CharacterPolynomial()
    for dp, c in coeffs.items():
        out = out + binom_basis_element(dp.positive, dp.negative) * Fraction(c)
    return out


# -- named representations ---------------------------------------------------


def _X(r):
    return CharacterPolynomial.X(r)


def _Y(r):
    return CharacterPolynomial.Y(r)


def canonical_rep_char_polys() -> dict[str, CharacterPolynomial]:
    """Character polynomials of the standard signed-permutation representation
    and of its square and exterior powers."""
    X1, X2, X3, Y1, Y2, Y3 = _X(1), _X(2), _X(3), _Y(1), _Y(2), _Y(3)
    cn = X1 - Y1
    sym2 = X1 + binom_poly(X1, 2) + Y1 + binom_poly(Y1, 2) + X2 - Y2 - X1 * Y1
    wedge2 = binom_poly(X1, 2) + binom_poly(Y1, 2) - X2 + Y2 - X1 * Y1
    wedge3 = (binom_poly(X1, 3) - binom_poly(Y1, 3) + X1 * binom_poly(Y1, 2)
              - Y1 * binom_poly(X1, 2)
              - X1 * X2 + X2 * Y1 + Y2 * X1 - Y1 * Y2 + X3 - Y3)
    return {"Cn": cn, "Sym2Cn": sym2, "Wedge2Cn": wedge2, "Wedge3Cn": wedge3}


# -- text syntax -------------------------------------------------------------


class CharPolyParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str):
        super().__init__(f"{message} at byte offset {offset} in {text!r}")
        self.offset = offset
        self.text = text


_TOKEN = re.compile(
    r"(?P<binom>binom:[0-9,]*\|[0-9,]*)"
    r"|(?P<num>\d+)"
    r"|(?P<var>[XY]\d+)(?![A-Za-z0-9])"
    r"|(?P<name>[A-Za-z][A-Za-z0-9]*)"
    r"|(?P<op>[-+*/^()])"
)


def _tokenize(text: str):
    pos = 0
    toks = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise CharPolyParseError("unexpected character", pos, text)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "var":
            val = (val[0], int(val[1:]))
        toks.append((kind, val, pos))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.presets = canonical_rep_char_polys()

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise CharPolyParseError(msg, tok[2], self.text)

    def parse(self) -> CharacterPolynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return p

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            s = -1 if self.take()[1] == "-" else 1
            acc = acc + self.term() * s
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            rhs = self.factor()
            if op[1] == "*":
                acc = acc * rhs
            elif rhs.degree() > 0 or rhs.is_zero():
                self.fail("can only divide by a nonzero constant", op)
            else:
                acc = acc * rhs.inverse()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    self.fail("expected a nonzero integer denominator", den)
                return CharacterPolynomial.constant(Fraction(int(val), int(den[1])))
            return CharacterPolynomial.constant(int(val))
        if kind == "var":
            name, r = val
            if r < 1:
                self.fail("cycle length index must be positive", tok)
            return _X(r) if name == "X" else _Y(r)
        if kind == "binom":
            dp = DoublePartition.from_text(val[len("binom:"):])
            return binom_basis_element(dp.positive, dp.negative)
        if kind == "name":
            if val in self.presets:
                return self.presets[val]
            self.fail(f"unknown name {val!r}", tok)
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("unexpected token", tok)


def parse_char_poly(text: str) -> CharacterPolynomial:
    """Parse ``1/2*X1^2*Y3 - X2``, ``binom:2,1|3`` terms and the presets
    ``Cn``, ``Sym2Cn``, ``Wedge2Cn``, ``Wedge3Cn``."""
    if not text.strip():
        raise CharPolyParseError("empty expression", 0, text)
    return _Parser(text).parse()
