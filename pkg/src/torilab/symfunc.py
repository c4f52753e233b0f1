"""Symmetric group characters, standard tableaux and major index.

Irreducible characters come from the Murnaghan-Nakayama rule, implemented
on beta-sets: removing a border strip of length ``k`` is moving a bead from
position ``b`` to an empty position ``b - k``, and the strip's height is the
number of beads jumped over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .coinvariant import ClassFunction, graded_char_a, inner_product
from .errors import VerificationError
from .partitions import Partition, enumerate_partitions


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    m = len(parts)
    return tuple(p + (m - 1 - i) for i, p in enumerate(parts))


def _from_beta_set(beta: tuple[int, ...]) -> tuple[int, ...]:
    bs = sorted(beta, reverse=True)
    m = len(bs)
    parts = tuple(b - (m - 1 - i) for i, b in enumerate(bs))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = tuple(x if x != b else t for x in beta)
        total += (-1) ** height * _mn(_from_beta_set(new_beta), rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """``chi^lam`` evaluated on the class of cycle type ``mu``."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |lambda| = {lam.size}, |mu| = {mu.size}")
    return _mn(lam.parts, mu.parts)


def irreducible_character(lam: Partition) -> ClassFunction:
    n = lam.size
    return ClassFunction("A", n, {mu: mn_character(lam, mu) for mu in enumerate_partitions(n)})


# -- standard tableaux -------------------------------------------------------


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def descents(self) -> frozenset[int]:
        """``i`` is a descent when ``i+1`` sits in a strictly lower row."""
        row_of = {v: r for r, row in enumerate(self.rows) for v in row}
        n = self.shape.size
        return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])

    def maj(self) -> int:
        return sum(self.descents())


@dataclass(frozen=True)
class TableauStats:
    descents: frozenset
    maj: int


def standard_tableaux(lam: Partition) -> list[StandardTableau]:
    """All standard Young tableaux of shape ``lam`` (placing 1..n in turn)."""
    shape = lam.parts
    n = lam.size
    rows: list[list[int]] = [[] for _ in shape]
    out: list[StandardTableau] = []

    def place(v: int) -> None:
        if v > n:
            out.append(StandardTableau(lam, tuple(tuple(r) for r in rows)))
            return
        for i, length in enumerate(shape):
            cur = len(rows[i])
            if cur < length and (i == 0 or len(rows[i - 1]) > cur):
                rows[i].append(v)
                place(v + 1)
                rows[i].pop()

    place(1)
    return out


def tableau_stats(t: StandardTableau) -> TableauStats:
    d = t.descents()
    return TableauStats(d, sum(d))


def f_lambda_i(lam: Partition) -> dict[int, int]:
    """Number of standard tableaux of shape ``lam`` by major index."""
    counts: dict[int, int] = {}
    for t in standard_tableaux(lam):
        m = t.maj()
        counts[m] = counts.get(m, 0) + 1
    return dict(sorted(counts.items()))


def hook_length_count(lam: Partition) -> int:
    """Number of standard tableaux via the hook length formula."""
    conj = lam.conjugate().parts
    hooks = prod(lam.parts[i] - j + conj[j] - i - 1
                 for i in range(len(lam.parts)) for j in range(lam.parts[i]))
    return factorial(lam.size) // hooks


@dataclass
class MultiplicityReport:
    n: int
    checked: int
    table: dict
    ok: bool

    def to_json(self) -> dict:
        return {"n": self.n, "checked": self.checked, "ok": self.ok,
                "table": {lam.to_text(): {str(i): str(m) for i, m in row.items()}
                          for lam, row in self.table.items()}}


def verify_multiplicity_lemma(n: int) -> MultiplicityReport:
    """Check ``<chi^lam, R_n^i> = f_{lam,i}`` for every ``lam`` of ``n`` and every ``i``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    G = graded_char_a(n)
    top = n * (n - 1) // 2
    table: dict = {}
    checked = 0
    for lam in enumerate_partitions(n):
        chi = irreducible_character(lam)
        expected = f_lambda_i(lam)
        row = {}
        for i in range(top + 1):
            m = inner_product(chi, G.piece(i))
            checked += 1
            if m != expected.get(i, 0):
                raise VerificationError(
                    f"multiplicity of chi^{lam.parts} in R_{n}^{i} is {m}, expected {expected.get(i, 0)}",
                    {"lambda": lam.to_text(), "i": i})
            if m:
                row[i] = m
        table[lam] = row
    return MultiplicityReport(n, checked, table, True)
