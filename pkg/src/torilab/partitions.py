"""Partitions and double partitions: the class labels of S_n and B_n.

Enumeration order is reverse-lexicographic on the part tuple, e.g. for
n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  Double partitions of n are
listed by decreasing ``|mu|`` and, within that, by the order of ``mu``
then ``lambda``.  Both orders are fixed so serialized output is
reproducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicity(self, r: int) -> int:
        """``n_r``: how many parts equal ``r``."""
        return self.parts.count(r)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition text {text!r}") from exc

    def __repr__(self):
        return f"Partition({self.parts})"


EMPTY = Partition(())


@dataclass(frozen=True)
class DoublePartition:
    """Class label ``(mu, lambda)`` of B_n: positive and negative cycle lengths."""

    positive: Partition = EMPTY
    negative: Partition = EMPTY

    @property
    def size(self) -> int:
        return self.positive.size + self.negative.size

    def to_text(self) -> str:
        return f"{self.positive.to_text()}|{self.negative.to_text()}"

    @classmethod
    def from_text(cls, text: str) -> "DoublePartition":
        if "|" not in text:
            raise ValueError(f"double partition text needs '|': {text!r}")
        mu, lam = text.split("|", 1)
        return cls(Partition.from_text(mu), Partition.from_text(lam))

    @classmethod
    def of(cls, mu=(), lam=()) -> "DoublePartition":
        return cls(Partition(tuple(mu)), Partition(tuple(lam)))

    def __repr__(self):
        return f"DoublePartition({self.to_text()!r})"


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_tuples(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partition_tuples(n))


@lru_cache(maxsize=None)
def _double_partition_tuples(n: int) -> tuple[DoublePartition, ...]:
    out = []
    for k in range(n, -1, -1):
        for mu in _partition_tuples(k):
            for lam in _partition_tuples(n - k):
                out.append(DoublePartition(mu, lam))
    return tuple(out)


def enumerate_double_partitions(n: int) -> list[DoublePartition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_double_partition_tuples(n))


def z_lambda(lam: Partition) -> int:
    """Centralizer order in S_n: ``prod_r n_r! r^{n_r}``."""
    return prod(factorial(m) * r**m for r, m in lam.multiplicities().items())


def v_mu(mu: Partition) -> int:
    """``prod_r n_r! (2r)^{n_r}``; ``v_mu * v_lambda`` is the B_n centralizer order."""
    return prod(factorial(m) * (2 * r) ** m for r, m in mu.multiplicities().items())


def class_size_a(lam: Partition) -> int:
    return factorial(lam.size) // z_lambda(lam)


def class_size_bc(c: DoublePartition) -> int:
    n = c.size
    return (2**n * factorial(n)) // (v_mu(c.positive) * v_mu(c.negative))


def order_a(n: int) -> int:
    return factorial(n)


def order_bc(n: int) -> int:
    return 2**n * factorial(n)


# -- explicit permutations (used by oracles and brute-force checks) ---------


def cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation of ``0..n-1`` given as its image list."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition(tuple(lengths))


def signed_cycle_type(word: tuple[int, ...]) -> DoublePartition:
    """Signed cycle type of a signed permutation word.

    ``word[i] = s*(j+1)`` means basis vector ``e_i`` maps to ``s*e_j``.  A
    cycle is negative when it carries an odd number of sign changes.
    """
    n = len(word)
    seen = [False] * n
    pos, neg = [], []
    for i in range(n):
        if seen[i]:
            continue
        j, length, sign = i, 0, 1
        while not seen[j]:
            seen[j] = True
            w = word[j]
            sign *= 1 if w > 0 else -1
            j = abs(w) - 1
            length += 1
        (pos if sign > 0 else neg).append(length)
    return DoublePartition(Partition(tuple(pos)), Partition(tuple(neg)))


def permutation_representative(lam: Partition) -> tuple[int, ...]:
    """A permutation of cycle type ``lam``: consecutive letters form each cycle."""
    perm = []
    start = 0
    for r in lam.parts:
        perm.extend(start + (k + 1) % r for k in range(r))
        start += r
    return tuple(perm)


def signed_representative(c: DoublePartition) -> tuple[int, ...]:
    """A signed permutation word of class ``c``; negative cycles flip one sign."""
    word = []
    start = 0
    for r, negative in [(r, False) for r in c.positive.parts] + [(r, True) for r in c.negative.parts]:
        for k in range(r):
            target = start + (k + 1) % r
            s = -1 if (negative and k == r - 1) else 1
            word.append(s * (target + 1))
        start += r
    return tuple(word)
