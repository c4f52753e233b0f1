"""Stable twisted Betti numbers of the spaces of maximal tori in type B/C.

For ``P = binom(X, mu) binom(Y, lam)`` the stable Betti numbers have
generating function

    1/(v_mu v_lam) * prod_r (1 - z^r)^{-n_r(mu)} (1 + z^r)^{-n_r(lam)}

and a general ``P`` is handled through its binomial-basis expansion.  The
module also computes the same numbers directly as inner products against
the coinvariant characters of B_n, so every closed form has an
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm

from .charpoly import CharacterPolynomial, binom_basis_element, evaluate, to_binomial_basis
from .coinvariant import graded_coeffs_bc
from .errors import StabilityError, VerificationError
from .exactmath import Poly, RationalFunction, TruncatedSeries, format_rational, series_from_rational
from .partitions import (
    DoublePartition,
    class_size_bc,
    enumerate_double_partitions,
    order_bc,
    v_mu,
)


def _one_plus(r: int, sign: int) -> Poly:
    return Poly.constant(1) + Poly.monomial(r, sign)


def basis_gf(dp: DoublePartition) -> RationalFunction:
    """Stable Betti generating function of a single binomial-basis element."""
    den = Poly.constant(v_mu(dp.positive) * v_mu(dp.negative))
    for r in dp.positive.parts:
        den = den * _one_plus(r, -1)
    for r in dp.negative.parts:
        den = den * _one_plus(r, 1)
    return RationalFunction(1, den, var="z")


@dataclass
class BettiGF:
    P: CharacterPolynomial
    gf: RationalFunction
    _cache: list = field(default_factory=list, repr=False)

    def coeffs(self, N: int) -> list[Fraction]:
        if len(self._cache) <= N:
            s = series_from_rational(self.gf.num.coeffs, self.gf.den.coeffs, N)
            self._cache[:] = [Fraction(c) for c in s.coeffs]
        return self._cache[: N + 1]

    def to_json(self) -> dict:
        return {"num": self.gf.num.to_strings(), "den": self.gf.den.to_strings(),
                "text": self.gf.format()}


def quasiperiod_bound(degree: int) -> int:
    """``lcm{2k : 1 <= k <= degree}`` (1 for degree <= 0)."""
    return reduce(lcm, (2 * k for k in range(1, degree + 1)), 1)


def stable_betti_gf(P: CharacterPolynomial) -> BettiGF:
    gf = RationalFunction(0, 1, var="z")
    for dp, c in to_binomial_basis(P).items():
        gf = gf + basis_gf(dp) * c
    gf.var = "z"
    return BettiGF(P, gf)


def poles_are_roots_of_unity(b: BettiGF) -> bool:
    """Denominator divides ``(1 - z^M)^D`` with ``M`` the quasiperiod bound, ``D = deg P``."""
    D = max(b.P.degree(), 0)
    M = quasiperiod_bound(D)
    target = _one_plus(M, -1) ** D
    return (target % b.gf.den).is_zero()


def betti_coeffs(P: CharacterPolynomial, N: int) -> list[Fraction]:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return stable_betti_gf(P).coeffs(N)


# -- direct inner products ---------------------------------------------------


def _order_bucket(i: int) -> int:
    return max(16, ((i + 15) // 16) * 16)


@lru_cache(maxsize=64)
def _class_table(n: int, order: int):
    return [(c, class_size_bc(c), graded_coeffs_bc(c, order)) for c in enumerate_double_partitions(n)]


def betti_at(P: CharacterPolynomial, n: int, i: int) -> Fraction:
    """``<P, chi_{R_n^i}>_{B_n}``, computed directly over the classes of B_n."""
    if i > n * n:
        return Fraction(0)
    order = _order_bucket(i)
    total = Fraction(0)
    for c, size, coeffs in _class_table(n, order):
        a = coeffs[i]
        if not a:
            continue
        v = evaluate(P, c)
        if v:
            total += size * a * v
    return total / order_bc(n)


def betti_vector_at(P: CharacterPolynomial, n: int, top: int) -> list[Fraction]:
    """``<P, chi_{R_n^i}>`` for ``i = 0..top`` (one pass over the classes)."""
    order = _order_bucket(top)
    out = [Fraction(0)] * (top + 1)
    for c, size, coeffs in _class_table(n, order):
        v = evaluate(P, c)
        if not v:
            continue
        w = size * v
        for i in range(top + 1):
            if coeffs[i]:
                out[i] += w * coeffs[i]
    G = order_bc(n)
    return [x / G for x in out]


@dataclass
class DirectBetti:
    value: Fraction
    n_star: int
    next_value: Fraction


def stable_betti_direct(P: CharacterPolynomial, i: int) -> DirectBetti:
    """Twisted Betti number at ``n* = deg(P) + i``, checked equal at ``n* + 1``."""
    n_star = max(P.degree(), 0) + i
    a = betti_at(P, n_star, i)
    b = betti_at(P, n_star + 1, i)
    if a != b:
        raise StabilityError(
            f"<P, R_n^{i}> changes between n = {n_star} and n = {n_star + 1}",
            {"P": P.format(), "i": i, "values": [format_rational(a), format_rational(b)]})
    return DirectBetti(a, n_star, b)


# -- double generating function ---------------------------------------------


@dataclass
class DoubleGFReport:
    cls: str
    n_max: int
    z_order: int
    ok: bool
    first_failure: tuple | None = None

    def to_json(self) -> dict:
        return {"class": self.cls, "n_max": self.n_max, "z_order": self.z_order,
                "ok": self.ok, "first_failure": self.first_failure}


def double_gf_lhs(dp: DoublePartition, n_max: int, z_order: int) -> list[TruncatedSeries]:
    """``f_n(z) = sum_i beta_i(n) z^i / prod_{k<=n} (1 - z^{2k})`` for ``n <= n_max``."""
    P = binom_basis_element(dp.positive, dp.negative)
    out = []
    for n in range(n_max + 1):
        top = min(z_order, n * n)
        betas = betti_vector_at(P, n, top)
        num = TruncatedSeries(betas, z_order)
        den = TruncatedSeries.one(z_order)
        for k in range(1, n + 1):
            den = den * TruncatedSeries([1] + [0] * (2 * k - 1) + [-1], z_order)
        out.append(num / den)
    return out


def double_gf_rhs(dp: DoublePartition, n_max: int, z_order: int) -> TruncatedSeries:
    """The product side as a series in ``u`` whose coefficients are series in ``z``."""
    z1 = TruncatedSeries.one(z_order)

    def zpoly(coeffs):
        return TruncatedSeries(coeffs, z_order)

    acc = TruncatedSeries([z1], n_max)
    # coefficient-wise scaling: a bare ``*`` would treat the z-series as a u-series
    for r in dp.positive.parts:
        factor = z1 / zpoly([1] + [0] * (r - 1) + [-1])
        acc = acc.shift(r).map(lambda c, f=factor: c * f)
    for r in dp.negative.parts:
        factor = z1 / zpoly([1] + [0] * (r - 1) + [1])
        acc = acc.shift(r).map(lambda c, f=factor: c * f)
    acc = acc * Fraction(1, v_mu(dp.positive) * v_mu(dp.negative))
    r = 1
    while 2 * r - 2 <= z_order:
        e = 2 * r - 2
        acc = acc / TruncatedSeries([z1, -TruncatedSeries.monomial(e, 1, z_order)], n_max)
        r += 1
    return acc


def verify_double_gf(dp: DoublePartition, n_max: int, z_order: int, strict: bool = True) -> DoubleGFReport:
    lhs = double_gf_lhs(dp, n_max, z_order)
    rhs = double_gf_rhs(dp, n_max, z_order)
    for n in range(n_max + 1):
        r = rhs.coefficient(n)
        r = r if isinstance(r, TruncatedSeries) else TruncatedSeries([r], z_order)
        for i in range(z_order + 1):
            if lhs[n].coefficient(i) != r.coefficient(i):
                report = DoubleGFReport(dp.to_text(), n_max, z_order, False, (n, i))
                if strict:
                    raise VerificationError(f"double generating function differs at u^{n} z^{i}",
                                            report.to_json())
                return report
    return DoubleGFReport(dp.to_text(), n_max, z_order, True)


# -- recurrences and quasipolynomials ----------------------------------------


@dataclass
class LinearRecurrence:
    """``beta_i = sum_j d_j beta_{i-j}`` for ``i >= valid_from``, with
    ``beta_k = 0`` for negative ``k``."""

    coefficients: list
    valid_from: int

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def lags(self) -> list[int]:
        return [j + 1 for j, d in enumerate(self.coefficients) if d]

    def step(self, seq: list, i: int):
        return sum((d * seq[i - j - 1] for j, d in enumerate(self.coefficients)
                    if d and i - j - 1 >= 0), Fraction(0))

    def holds_from(self, seq: list, start: int) -> bool:
        return all(seq[i] == self.step(seq, i) for i in range(start, len(seq)))

    def unroll(self, initial: list, count: int) -> list:
        seq = list(initial[: self.valid_from])
        while len(seq) < count:
            seq.append(self.step(seq, len(seq)))
        return seq[:count]

    def to_json(self) -> dict:
        return {"lags": self.lags,
                "coeffs": [format_rational(self.coefficients[j - 1]) for j in self.lags],
                "valid_from": self.valid_from}


def recurrence(P: CharacterPolynomial) -> LinearRecurrence:
    b = stable_betti_gf(P)
    A, B = b.gf.num, b.gf.den
    b0 = B[0]
    d = [-(B[j] / b0) for j in range(1, B.degree() + 1)]
    rec = LinearRecurrence(d, max(A.degree() + 1, 0))
    N = rec.order
    seq = b.coeffs(rec.valid_from + 3 * max(N, 1))
    if not rec.holds_from(seq, rec.valid_from):
        raise VerificationError("recurrence does not reproduce the series", {"P": P.format()})
    deg = max(P.degree(), 0)
    basis = to_binomial_basis(P)
    if len(basis) == 1 and N != deg:
        raise VerificationError("basis element recurrence order differs from deg P",
                                {"P": P.format(), "N": N})
    if N > 2 * deg * deg:
        raise VerificationError("recurrence order exceeds 2 deg(P)^2", {"P": P.format(), "N": N})
    return rec


def _interpolate(points: list[tuple[int, Fraction]]) -> Poly:
    """Lagrange interpolation through the given points, exactly."""
    out = Poly()
    for j, (xj, yj) in enumerate(points):
        if not yj:
            continue
        term = Poly.constant(yj)
        for m, (xm, _) in enumerate(points):
            if m != j:
                term = term * Poly([-xm, 1]) * Fraction(1, xj - xm)
        out = out + term
    return out


@dataclass
class Quasipolynomial:
    period: int
    polys: list
    valid_from: int

    def __call__(self, i: int) -> Fraction:
        if i < self.valid_from:
            raise ValueError(f"quasipolynomial valid only from i = {self.valid_from}")
        return self.polys[i % self.period](i)

    def degree(self) -> int:
        return max(p.degree() for p in self.polys)

    def cases(self) -> list[tuple[list[int], Poly]]:
        groups: dict = {}
        for r, p in enumerate(self.polys):
            groups.setdefault(p, []).append(r)
        return sorted(((rs, p) for p, rs in groups.items()), key=lambda t: t[0][0])

    def to_json(self) -> dict:
        return {"period": self.period, "valid_from": self.valid_from,
                "cases": [{"residues": rs, "poly": p.to_strings(), "text": p.format("d")}
                          for rs, p in self.cases()]}


def quasipolynomial(P: CharacterPolynomial) -> Quasipolynomial:
    D = max(P.degree(), 0)
    valid_from = 0 if P.constant_term() == 0 else 1
    M = quasiperiod_bound(D)
    window = valid_from + (D + 1) * M + 2 * M
    seq = betti_coeffs(P, window)
    for period in (m for m in range(1, M + 1) if M % m == 0):
        polys = []
        for rho in range(period):
            pts = [(i, seq[i]) for i in range(valid_from, window + 1) if i % period == rho]
            fit = _interpolate(pts[:D]) if D else Poly()
            if all(fit(x) == y for x, y in pts):
                polys.append(fit)
            else:
                break
        else:
            return Quasipolynomial(period, polys, valid_from)
    raise VerificationError("no quasipolynomial fits within the period bound", {"P": P.format()})


@dataclass
class BettiReport:
    P: CharacterPolynomial
    gf: BettiGF
    coeffs: list
    recurrence: LinearRecurrence | None = None
    quasipolynomial: Quasipolynomial | None = None

    def to_json(self) -> dict:
        out = {"poly": self.P.format(), "gf": self.gf.to_json(),
               "coeffs": [format_rational(c) for c in self.coeffs]}
        if self.recurrence is not None:
            out["recurrence"] = self.recurrence.to_json()
        if self.quasipolynomial is not None:
            out["quasipolynomial"] = self.quasipolynomial.to_json()
        return out


def betti_report(P: CharacterPolynomial, terms: int, with_recurrence: bool = False,
                 with_quasipoly: bool = False) -> BettiReport:
    gf = stable_betti_gf(P)
    return BettiReport(P, gf, gf.coeffs(terms),
                       recurrence(P) if with_recurrence else None,
                       quasipolynomial(P) if with_quasipoly else None)
