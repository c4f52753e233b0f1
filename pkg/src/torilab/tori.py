"""Counting F-stable maximal tori and polynomial statistics on them.

Everything here is exact in ``q``: counts and statistic sums are
:class:`RationalFunction` values (polynomials, in fact), and identities are
checked by comparing canonical forms.  Numeric helpers evaluate the same
formulas at an integer ``q`` for the convergence experiments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

from .charpoly import CharacterPolynomial, binom_basis_element, evaluate, to_binomial_basis
from .coinvariant import ClassFunction, _check_family, classes, multiplicities
from .errors import VerificationError
from .exactmath import Poly, RationalFunction, TruncatedSeries, format_rational, series_exp
from .partitions import EMPTY, DoublePartition, Partition, v_mu, z_lambda

Q = Poly.x()


def _q_binomial(r: int, sign: int) -> Poly:
    """``q^r + sign``."""
    return Poly.monomial(r) + sign


@lru_cache(maxsize=None)
def gl_order(n: int) -> Poly:
    """``|GL_n(F_q)| = q^{n(n-1)/2} prod_{i<=n} (q^i - 1)``."""
    out = Poly.monomial(n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * _q_binomial(i, -1)
    return out


@lru_cache(maxsize=None)
def sp_order(n: int) -> Poly:
    """``|Sp_2n(F_q)| = q^{n^2} prod_{i<=n} (q^{2i} - 1)``."""
    out = Poly.monomial(n * n)
    for i in range(1, n + 1):
        out = out * _q_binomial(2 * i, -1)
    return out


@dataclass(frozen=True)
class GroupOrder:
    family: str
    n: int
    order: RationalFunction

    @classmethod
    def of(cls, family: str, n: int) -> "GroupOrder":
        family = _check_family(family)
        p = gl_order(n) if family == "A" else sp_order(n)
        return cls("GL" if family == "A" else "Sp", n, RationalFunction(p))


def total_tori_exponent(family: str, n: int) -> int:
    return n * n - n if _check_family(family) == "A" else 2 * n * n


# -- counts ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _count_a_poly(lam: Partition) -> tuple[Poly, int]:
    den = Poly.constant(1)
    for r in lam.parts:
        den = den * _q_binomial(r, -1)
    return gl_order(lam.size).exact_div(den), z_lambda(lam)


@lru_cache(maxsize=None)
def _count_bc_poly(c: DoublePartition) -> tuple[Poly, int]:
    den = Poly.constant(1)
    for r in c.positive.parts:
        den = den * _q_binomial(r, -1)
    for r in c.negative.parts:
        den = den * _q_binomial(r, 1)
    return sp_order(c.size).exact_div(den), v_mu(c.positive) * v_mu(c.negative)


def count_tori_a(lam: Partition, n: int | None = None) -> RationalFunction:
    """Number of F-stable maximal tori of GL_n of type ``lam``."""
    if n is not None and lam.size != n:
        raise ValueError(f"size mismatch: |lambda| = {lam.size}, n = {n}")
    p, z = _count_a_poly(lam)
    return RationalFunction(p, z)


def count_tori_bc(c: DoublePartition, n: int | None = None) -> RationalFunction:
    """Number of F-stable maximal tori of Sp_2n (or SO_2n+1) of type ``(mu, lam)``."""
    if n is not None and c.size != n:
        raise ValueError(f"size mismatch: |mu| + |lambda| = {c.size}, n = {n}")
    p, v = _count_bc_poly(c)
    return RationalFunction(p, v)


def count_tori(family: str, c, n: int | None = None) -> RationalFunction:
    return count_tori_a(c, n) if _check_family(family) == "A" else count_tori_bc(c, n)


def count_tori_at(family: str, c, q: int) -> Fraction:
    """The same count evaluated at an integer ``q`` with plain integers."""
    if _check_family(family) == "A":
        n = c.size
        num = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))
        den = z_lambda(c) * prod(q**r - 1 for r in c.parts)
    else:
        n = c.size
        num = q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        den = (v_mu(c.positive) * v_mu(c.negative)
               * prod(q**r - 1 for r in c.positive.parts)
               * prod(q**r + 1 for r in c.negative.parts))
    return Fraction(num, den)


# -- statistics --------------------------------------------------------------


@dataclass(frozen=True)
class TorusStatistic:
    family: str
    n: int
    P: CharacterPolynomial
    value: RationalFunction

    def normalized(self) -> RationalFunction:
        return self.value / Poly.monomial(total_tori_exponent(self.family, self.n))


def _check_poly_family(family: str, P: CharacterPolynomial) -> str:
    family = _check_family(family)
    if family == "A" and not P.is_type_a():
        raise ValueError("type-A statistics need a character polynomial without Y variables")
    return family


def _weighted_class_sum(family: str, n: int, weight) -> RationalFunction:
    """``sum_c count(c) * weight(c)`` collected over a common denominator."""
    family = _check_family(family)
    acc = Poly()
    for c in classes(family, n):
        w = Fraction(weight(c))
        if not w:
            continue
        p, z = _count_a_poly(c) if family == "A" else _count_bc_poly(c)
        acc = acc + p * (w / z)
    return RationalFunction(acc)


def statistic_sum(family: str, P: CharacterPolynomial, n: int) -> RationalFunction:
    """``sum_{T in T(n,q)} P(T)`` as an exact polynomial in ``q``."""
    family = _check_poly_family(family, P)
    return _weighted_class_sum(family, n, lambda c: evaluate(P, c))


def torus_statistic(family: str, P: CharacterPolynomial, n: int) -> TorusStatistic:
    return TorusStatistic(_check_family(family), n, P, statistic_sum(family, P, n))


def normalized_statistic_at(family: str, P: CharacterPolynomial, n: int, q: int) -> Fraction:
    """Average of ``P`` over T(n,q) at an integer ``q``, exactly."""
    family = _check_poly_family(family, P)
    total = Fraction(0)
    for c in classes(family, n):
        v = evaluate(P, c)
        if v:
            total += count_tori_at(family, c, q) * v
    return total / q ** total_tori_exponent(family, n)


# -- Lehrer's identity -------------------------------------------------------


@dataclass
class LehrerReport:
    family: str
    n: int
    lhs: RationalFunction
    rhs: RationalFunction
    ok: bool

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "lhs": self.lhs.format(),
                "rhs": self.rhs.format(), "ok": self.ok}


def lehrer_lhs(family: str, n: int, chi: ClassFunction) -> RationalFunction:
    """Average of ``chi`` over the F-stable maximal tori."""
    family = _check_family(family)
    _check_chi(family, n, chi)
    total = _weighted_class_sum(family, n, lambda c: chi.values[c])
    return total / Poly.monomial(total_tori_exponent(family, n))


def lehrer_rhs(family: str, n: int, chi: ClassFunction) -> RationalFunction:
    """``sum_i q^{-i} <chi, R_n^i>`` over the coinvariant grading."""
    family = _check_family(family)
    _check_chi(family, n, chi)
    m = multiplicities(chi)
    top = len(m) - 1
    num = Poly([m[top - k] for k in range(top + 1)])
    return RationalFunction(num, Poly.monomial(top))


def _check_chi(family: str, n: int, chi: ClassFunction) -> None:
    if chi.family != family or chi.n != n:
        raise ValueError(f"class function is on {chi.family}_{chi.n}, expected {family}_{n}")


def lehrer_verify(family: str, n: int, chi: ClassFunction, strict: bool = True) -> LehrerReport:
    family = _check_family(family)
    lhs, rhs = lehrer_lhs(family, n, chi), lehrer_rhs(family, n, chi)
    report = LehrerReport(family, n, lhs, rhs, lhs == rhs)
    if strict and not report.ok:
        raise VerificationError(f"Lehrer identity fails for {family}, n = {n}", report.to_json())
    return report


# -- limits ------------------------------------------------------------------


def asymptotic_limit(family: str, mu: Partition, lam: Partition = EMPTY) -> RationalFunction:
    """Limit of the average of ``binom(X, mu) binom(Y, lam)`` as ``n -> oo``.

    For type A pass the partition as ``mu`` and leave ``lam`` empty.
    """
    family = _check_family(family)
    q = RationalFunction.variable()
    out = RationalFunction(1)
    if family == "A":
        if lam.parts:
            raise ValueError("type-A basis elements have no Y part")
        for r in mu.parts:
            out = out * (q**r / (q**r - 1))
        return out / z_lambda(mu)
    for r in mu.parts:
        out = out * (q**r / (q**r - 1))
    for r in lam.parts:
        out = out * (q**r / (q**r + 1))
    return out / (v_mu(mu) * v_mu(lam))


def asymptotic_limit_poly(family: str, P: CharacterPolynomial) -> RationalFunction:
    """Limit for a general character polynomial, by linearity in the binomial basis."""
    family = _check_poly_family(family, P)
    out = RationalFunction(0)
    for dp, c in to_binomial_basis(P).items():
        out = out + asymptotic_limit(family, dp.positive, dp.negative) * c
    return out


@dataclass
class ConvergenceReport:
    family: str
    P: str
    q: int
    limit: Fraction
    diffs: list
    monotone_from: int
    tolerance: Fraction
    ok: bool
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"family": self.family, "poly": self.P, "q": self.q,
                "limit": format_rational(self.limit),
                "abs_diffs": [format_rational(d) for d in self.diffs],
                "abs_diffs_float": [float(d) for d in self.diffs],
                "monotone_from": self.monotone_from,
                "tolerance": format_rational(self.tolerance), "ok": self.ok,
                "failures": self.failures}


def verify_convergence(family: str, P: CharacterPolynomial, n_max: int, q_value: int,
                       monotone_from: int = 3, strict: bool = True) -> ConvergenceReport:
    """Compare averages for ``n = 1..n_max`` with the closed-form limit at ``q_value``.

    Requires ``|diff|`` nonincreasing from ``monotone_from`` on and
    ``|diff(n_max)| <= 2 q^{-n_max}``.  The tolerance is an engineering
    choice, not a proven rate.
    """
    if q_value < 2:
        raise ValueError("q must be at least 2")
    family = _check_poly_family(family, P)
    limit = asymptotic_limit_poly(family, P)(q_value)
    diffs = [abs(normalized_statistic_at(family, P, n, q_value) - limit) for n in range(1, n_max + 1)]
    tol = Fraction(2, q_value**n_max)
    failures = []
    for n in range(max(monotone_from, 2), n_max + 1):
        if diffs[n - 1] > diffs[n - 2]:
            failures.append({"n": n, "reason": "difference increased"})
    if diffs[-1] > tol:
        failures.append({"n": n_max, "reason": "difference above tolerance"})
    report = ConvergenceReport(family, P.format(), q_value, limit, diffs, monotone_from, tol,
                               not failures, failures)
    if strict and failures:
        raise VerificationError("convergence check failed", report.to_json())
    return report


# -- generating functions in u -----------------------------------------------


def euler_product_series(scale: RationalFunction, base: RationalFunction, order: int) -> TruncatedSeries:
    """``prod_{k>=1} 1/(1 - scale*u/base^k)`` via its Euler closed form

        sum_n (scale*u)^n base^{n(n-1)/2} / prod_{i<=n} (base^i - 1).
    """
    coeffs = [RationalFunction(1)]
    den = RationalFunction(1)
    for n in range(1, order + 1):
        den = den * (base**n - 1)
        coeffs.append(scale**n * base ** (n * (n - 1) // 2) / den)
    return TruncatedSeries(coeffs, order)


def _q() -> RationalFunction:
    return RationalFunction.variable()


def geometric_tail(family: str, order: int) -> TruncatedSeries:
    """Type A: ``prod_{r>=1} 1/(1-u/q^r)``; type B/C: ``prod_{k>=1} 1/(1-u/q^{2k-1})``."""
    q = _q()
    if _check_family(family) == "A":
        return euler_product_series(RationalFunction(1), q, order)
    return euler_product_series(q, q * q, order)


def exp_form(family: str, order: int) -> TruncatedSeries:
    """The exponential product with every ``x_k = y_k = 1``."""
    q = _q()
    terms: list = [0]
    for k in range(1, order + 1):
        if _check_family(family) == "A":
            terms.append(1 / ((q**k - 1) * k))
        else:
            terms.append(1 / ((q**k - 1) * (2 * k)) + 1 / ((q**k + 1) * (2 * k)))
    return series_exp(TruncatedSeries(terms, order))


def average_gf(family: str, mu: Partition, lam: Partition, order: int) -> TruncatedSeries:
    """Right-hand side of the average-value generating function, in ``u`` over Q(q)."""
    family = _check_family(family)
    q = _q()
    pref = TruncatedSeries.one(order)
    if family == "A":
        if lam.parts:
            raise ValueError("type-A basis elements have no Y part")
        for k in mu.parts:
            pref = pref.shift(k) * (1 / (q**k - 1))
        pref = pref * Fraction(1, z_lambda(mu))
    else:
        for r in mu.parts:
            pref = pref.shift(r) * (1 / (q**r - 1))
        for r in lam.parts:
            pref = pref.shift(r) * (1 / (q**r + 1))
        pref = pref * Fraction(1, v_mu(mu) * v_mu(lam))
    return pref * geometric_tail(family, order)


@dataclass
class AverageGFReport:
    family: str
    cls: str
    n_max: int
    coefficients: list
    exp_form_ok: bool
    ok: bool

    def to_json(self) -> dict:
        return {"family": self.family, "class": self.cls, "n_max": self.n_max,
                "sums": [c.format() for c in self.coefficients],
                "exp_form_ok": self.exp_form_ok, "ok": self.ok}


def verify_average_gf(family: str, mu: Partition, lam: Partition, n_max: int,
                      strict: bool = True) -> AverageGFReport:
    """Check ``[u^n] RHS * |G_n| == sum_T binom(X,mu) binom(Y,lam)(T)`` for ``n <= n_max``,
    and that the exponential form of the all-ones specialization equals the
    geometric product it is replaced by."""
    family = _check_family(family)
    gf = average_gf(family, mu, lam, n_max)
    exp_ok = exp_form(family, n_max) == geometric_tail(family, n_max)
    P = binom_basis_element(mu, lam)
    sums = []
    ok = exp_ok
    first_bad = None
    for n in range(n_max + 1):
        G = gl_order(n) if family == "A" else sp_order(n)
        predicted = gf.coefficient(n) * G
        actual = statistic_sum(family, P, n)
        sums.append(actual)
        if predicted != actual and first_bad is None:
            ok = False
            first_bad = n
    report = AverageGFReport(family, DoublePartition(mu, lam).to_text(), n_max, sums, exp_ok, ok)
    if strict and not ok:
        raise VerificationError(
            "average-value generating function mismatch"
            + (f" at n = {first_bad}" if first_bad is not None else " in the exponential form"),
            report.to_json())
    return report


def verify_exp_identity(order: int) -> bool:
    """``prod_i exp[u^i/((q^i-1) i)] == prod_r 1/(1-u/q^r)`` through ``u^order``."""
    return exp_form("A", order) == geometric_tail("A", order)


def verify_euler_identity(order: int, x_order: int) -> bool:
    """Euler's ``prod_r 1/(1-u x^r) = sum_n u^n x^n / prod_{i<=n} (1-x^i)``, with ``x = 1/q``,
    compared as a double series: ``u`` through ``order``, ``x`` through ``x_order``."""
    one_x = TruncatedSeries.one(x_order)
    lhs = TruncatedSeries.one(order).map(lambda c: c * one_x)
    for r in range(1, x_order + 1):
        factor = TruncatedSeries([one_x, -TruncatedSeries.monomial(r, 1, x_order)], order)
        lhs = lhs / factor
    rhs_coeffs = []
    for n in range(order + 1):
        den = TruncatedSeries.one(x_order)
        for i in range(1, n + 1):
            den = den * (one_x - TruncatedSeries.monomial(i, 1, x_order))
        rhs_coeffs.append(TruncatedSeries.monomial(n, 1, x_order) / den)
    rhs = TruncatedSeries(rhs_coeffs, order)
    return lhs == rhs
