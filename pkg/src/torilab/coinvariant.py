"""Graded characters of the coinvariant algebras of S_n and B_n.

For a class of B_n with positive cycle lengths ``mu`` and negative cycle
lengths ``lam`` the graded character is the polynomial

    prod_{i=1..n} (1 - z^{2i}) / prod_r (1 - z^r)^{n_r(mu)} (1 + z^r)^{n_r(lam)}

and for a class ``lam`` of S_n it is
``prod_{i=1..n} (1 - z^i) / prod_r (1 - z^r)^{n_r(lam)}``.  Both are
cross-checked against ``prod (1 - z^{d_i}) / det(1 - z M)`` for an explicit
(signed) permutation matrix ``M``.

All characters in play are rational valued, so inner products skip
complex conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Union

from .charpoly import CharacterPolynomial, evaluate
from .errors import VerificationError
from .exactmath import Poly, TruncatedSeries, series_pow_binomial
from .partitions import (
    DoublePartition,
    Partition,
    class_size_a,
    class_size_bc,
    enumerate_double_partitions,
    enumerate_partitions,
    order_a,
    order_bc,
    permutation_representative,
    signed_representative,
)

ClassLabel = Union[Partition, DoublePartition]
FAMILIES = ("A", "BC")


def _check_family(family: str) -> str:
    f = family.upper().replace("/", "")
    if f not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected 'A' or 'BC'")
    return f


def classes(family: str, n: int) -> list[ClassLabel]:
    family = _check_family(family)
    return enumerate_partitions(n) if family == "A" else enumerate_double_partitions(n)


def class_size(family: str, c: ClassLabel) -> int:
    return class_size_a(c) if _check_family(family) == "A" else class_size_bc(c)


def group_order(family: str, n: int) -> int:
    return order_a(n) if _check_family(family) == "A" else order_bc(n)


# -- integer polynomial helpers (coefficient lists, ascending) ---------------


def _mul_binomial(f: list[int], r: int, sign: int) -> list[int]:
    """``f * (1 + sign*z^r)``."""
    out = f + [0] * r
    for k, c in enumerate(f):
        out[k + r] += sign * c
    return out


def _div_binomial(f: list[int], r: int, sign: int) -> list[int]:
    """Exact quotient ``f / (1 + sign*z^r)``; raises if a remainder is left."""
    deg = len(f) - 1
    if deg < r:
        raise VerificationError("graded character division left a nonzero remainder")
    q = [0] * (deg - r + 1)
    for k in range(deg - r + 1):
        q[k] = f[k] - (sign * q[k - r] if k >= r else 0)
    # remainder check on the top r coefficients
    for k in range(deg - r + 1, deg + 1):
        if f[k] != sign * q[k - r]:
            raise VerificationError("graded character division left a nonzero remainder",
                                    {"r": r, "sign": sign})
    return q


@lru_cache(maxsize=None)
def _numerator(n: int, step: int) -> tuple[int, ...]:
    f = [1]
    for i in range(1, n + 1):
        f = _mul_binomial(f, step * i, -1)
    return tuple(f)


def graded_poly_bc(c: DoublePartition) -> Poly:
    """Graded character of B_n on one class, ``n = |mu| + |lam|``."""
    f = list(_numerator(c.size, 2))
    for r in c.positive.parts:
        f = _div_binomial(f, r, -1)
    for r in c.negative.parts:
        f = _div_binomial(f, r, 1)
    if len(f) - 1 != c.size**2:
        raise VerificationError("graded character has the wrong top degree", {"class": c.to_text()})
    return Poly(f)


def graded_poly_a(lam: Partition) -> Poly:
    f = list(_numerator(lam.size, 1))
    for r in lam.parts:
        f = _div_binomial(f, r, -1)
    n = lam.size
    if len(f) - 1 != n * (n - 1) // 2:
        raise VerificationError("graded character has the wrong top degree", {"class": lam.to_text()})
    return Poly(f)


@lru_cache(maxsize=4096)
def graded_coeffs_bc(c: DoublePartition, order: int) -> tuple[int, ...]:
    """First ``order + 1`` coefficients of the B_n graded character of ``c``.

    Computed as a truncated series, which is all the Betti computations
    need and is far cheaper than the full degree-``n^2`` polynomial.
    """
    f = list(_numerator_truncated(c.size, order))
    for r, sign in [(r, 1) for r in c.positive.parts] + [(r, -1) for r in c.negative.parts]:
        # multiply by 1/(1 - sign z^r) = sum_j sign^j z^{rj}
        for k in range(r, order + 1):
            f[k] += sign * f[k - r]
    return tuple(f)


@lru_cache(maxsize=None)
def _numerator_truncated(n: int, order: int) -> tuple[int, ...]:
    f = [1] + [0] * order
    for i in range(1, n + 1):
        d = 2 * i
        if d > order:
            break
        for k in range(order, d - 1, -1):
            f[k] -= f[k - d]
    return tuple(f)


@dataclass(frozen=True)
class GradedCharacter:
    n: int
    family: str
    polys: dict = field(hash=False)

    def coefficient(self, c: ClassLabel, i: int) -> int:
        return int(self.polys[c][i])

    def top_degree(self) -> int:
        return self.n * (self.n - 1) // 2 if self.family == "A" else self.n**2

    def piece(self, i: int) -> "ClassFunction":
        """Character of the degree-``i`` graded piece."""
        return ClassFunction(self.family, self.n, {c: p[i] for c, p in self.polys.items()})

    def identity_class(self) -> ClassLabel:
        if self.family == "A":
            return Partition((1,) * self.n)
        return DoublePartition(Partition((1,) * self.n), Partition(()))

    def to_json(self) -> list[dict]:
        return [{"class": c.to_text(), "poly": [int(x) for x in p.coeffs]}
                for c, p in self.polys.items()]


@lru_cache(maxsize=None)
def graded_char_bc(n: int) -> GradedCharacter:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GradedCharacter(n, "BC", {c: graded_poly_bc(c) for c in enumerate_double_partitions(n)})


@lru_cache(maxsize=None)
def graded_char_a(n: int) -> GradedCharacter:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GradedCharacter(n, "A", {lam: graded_poly_a(lam) for lam in enumerate_partitions(n)})


def graded_char(family: str, n: int) -> GradedCharacter:
    return graded_char_a(n) if _check_family(family) == "A" else graded_char_bc(n)


# -- determinant oracle ------------------------------------------------------


def signed_permutation_matrix(word: Iterable[int]) -> list[list[int]]:
    """Matrix sending ``e_i`` to ``sign * e_j`` for ``word[i] = sign*(j+1)``."""
    word = list(word)
    n = len(word)
    m = [[0] * n for _ in range(n)]
    for i, w in enumerate(word):
        m[abs(w) - 1][i] = 1 if w > 0 else -1
    return m


def permutation_matrix(perm: Iterable[int]) -> list[list[int]]:
    return signed_permutation_matrix([p + 1 for p in perm])


def det_one_minus_zm(m: list[list[int]]) -> Poly:
    """``det(I - z M)`` by the Faddeev-LeVerrier recursion over the rationals."""
    n = len(m)
    if n == 0:
        return Poly.constant(1)
    A = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]  # c_0 = 1 for det(lambda I - M) = sum c_k lambda^{n-k}
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A (M_{k-1} + c_{k-1} I)
        B = [[Mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        ck = -sum(Mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
    return Poly(coeffs)


def graded_char_bc_oracle(word: Iterable[int], n: int | None = None) -> Poly:
    """``prod (1 - z^{2i}) / det(1 - z M_sigma)`` for an explicit signed permutation."""
    word = tuple(word)
    if n is not None and n != len(word):
        raise ValueError("word length does not match n")
    num = Poly(_numerator(len(word), 2))
    return num.exact_div(det_one_minus_zm(signed_permutation_matrix(word)))


def graded_char_a_oracle(perm: Iterable[int]) -> Poly:
    perm = tuple(perm)
    num = Poly(_numerator(len(perm), 1))
    return num.exact_div(det_one_minus_zm(permutation_matrix(perm)))


def oracle_for_class(family: str, c: ClassLabel) -> Poly:
    if _check_family(family) == "A":
        return graded_char_a_oracle(permutation_representative(c))
    return graded_char_bc_oracle(signed_representative(c))


# -- class functions ---------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    family: str
    n: int
    values: dict = field(hash=False)

    def __post_init__(self):
        fam = _check_family(self.family)
        object.__setattr__(self, "family", fam)
        expected = classes(fam, self.n)
        if set(self.values) != set(expected):
            raise ValueError("class function must be keyed by exactly the full class list")
        object.__setattr__(self, "values", {c: Fraction(self.values[c]) for c in expected})

    def __getitem__(self, c):
        return self.values[c]

    @classmethod
    def from_callable(cls, family: str, n: int, f: Callable[[ClassLabel], object]) -> "ClassFunction":
        return cls(family, n, {c: f(c) for c in classes(family, n)})

    @classmethod
    def from_char_poly(cls, P: CharacterPolynomial, family: str, n: int) -> "ClassFunction":
        return cls.from_callable(family, n, lambda c: evaluate(P, c))

    @classmethod
    def trivial(cls, family: str, n: int) -> "ClassFunction":
        return cls.from_callable(family, n, lambda c: 1)

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.family, self.n, {c: v * other.values[c] for c, v in self.values.items()})

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.family, self.n, {c: v + other.values[c] for c, v in self.values.items()})

    def to_json(self) -> dict:
        from .exactmath import format_rational

        return {c.to_text(): format_rational(v) for c, v in self.values.items()}


def _same_group(f: ClassFunction, g: ClassFunction) -> None:
    if f.family != g.family or f.n != g.n:
        raise ValueError(f"class functions live on different groups: {f.family}_{f.n} vs {g.family}_{g.n}")


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``(1/|G|) sum_classes |class| f g``, without conjugation."""
    _same_group(f, g)
    total = 0
    for c, v in f.values.items():
        w = g.values[c]
        if v and w:
            total += class_size(f.family, c) * v * w
    return Fraction(total, group_order(f.family, f.n))


def multiplicities(chi: ClassFunction) -> list[Fraction]:
    """``<chi, R_n^i>`` for every degree ``i`` of the coinvariant algebra."""
    G = graded_char(chi.family, chi.n)
    order = group_order(chi.family, chi.n)
    out = [Fraction(0)] * (G.top_degree() + 1)
    for c, v in chi.values.items():
        if not v:
            continue
        w = class_size(chi.family, c) * v
        for i, a in enumerate(G.polys[c].coeffs):
            if a:
                out[i] += w * a
    return [x / order for x in out]


# -- the character polynomials Q_i -------------------------------------------


@lru_cache(maxsize=None)
def _q_series(D: int) -> TruncatedSeries:
    acc = TruncatedSeries.one(D)
    for k in range(1, D + 1):
        acc = acc * series_pow_binomial(-1, k, 1 - CharacterPolynomial.X(k), D)
        acc = acc * series_pow_binomial(1, k, 1 - CharacterPolynomial.Y(k), D)
    return acc


def q_char_polys(D: int) -> list[CharacterPolynomial]:
    """``Q_0..Q_D`` from ``prod_k (1-t^k)^{1-X_k} (1+t^k)^{1-Y_k}``.

    Factor ``k`` only touches degrees ``>= k``, so the product stops at
    ``k = D``.
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    s = _q_series(D)
    return [CharacterPolynomial.coerce(s.coefficient(i)) for i in range(D + 1)]


@dataclass
class StableRangeReport:
    n: int
    agree_through: int
    first_mismatch: tuple | None
    ok: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "agree_through": self.agree_through,
            "first_mismatch": None if self.first_mismatch is None else {
                "i": self.first_mismatch[0], "class": self.first_mismatch[1],
                "Q_i": str(self.first_mismatch[2]), "chi": str(self.first_mismatch[3])},
            "ok": self.ok,
        }


def verify_stable_range(n: int, strict: bool = True) -> StableRangeReport:
    """Check ``Q_i = chi_{R_n^i}`` on B_n for ``i <= 2n+1`` and failure at ``2n+2``."""
    top = 2 * n + 2
    Q = q_char_polys(top)
    G = graded_char_bc(n)
    for i in range(top + 1):
        for c, p in G.polys.items():
            q_val = evaluate(Q[i], c)
            chi_val = p[i]
            if q_val != chi_val:
                ok = i == top
                report = StableRangeReport(n, i - 1, (i, c.to_text(), q_val, chi_val), ok)
                if strict and not ok:
                    raise VerificationError(
                        f"Q_{i} disagrees with chi(R_{n}^{i}) inside the stable range",
                        report.to_json())
                return report
    report = StableRangeReport(n, top, None, False)
    if strict:
        raise VerificationError(f"no mismatch at i = {top} for n = {n}; stable range not sharp",
                                report.to_json())
    return report
