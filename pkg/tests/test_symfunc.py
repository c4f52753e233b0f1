from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torilab.coinvariant import inner_product
from torilab.partitions import Partition, enumerate_partitions
from torilab.symfunc import (
    f_lambda_i,
    hook_length_count,
    irreducible_character,
    mn_character,
    standard_tableaux,
    verify_multiplicity_lemma,
)

P = Partition


def test_known_character_values():
    assert mn_character(P((2, 1)), P((3,))) == -1
    assert mn_character(P((2, 1)), P((1, 1, 1))) == 2
    # sign character on a transposition
    assert mn_character(P((1, 1, 1, 1)), P((2, 1, 1))) == -1
    with pytest.raises(ValueError):
        mn_character(P((2,)), P((1,)))


def test_character_table_s4_row():
    # chi^(3,1) on classes (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    row = [mn_character(P((3, 1)), mu) for mu in enumerate_partitions(4)]
    assert row == [-1, 0, -1, 1, 3]


@pytest.mark.parametrize("n", range(1, 7))
def test_column_and_row_orthogonality(n):
    chars = [irreducible_character(lam) for lam in enumerate_partitions(n)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b) == (1 if i == j else 0)
    assert sum(irreducible_character(lam).values[P((1,) * n)] ** 2
               for lam in enumerate_partitions(n)) == factorial(n)


def test_tableaux_and_maj():
    tabs = standard_tableaux(P((2, 1)))
    assert sorted(t.rows for t in tabs) == [((1, 2), (3,)), ((1, 3), (2,))]
    assert f_lambda_i(P((2, 1, 1))) == {3: 1, 4: 1, 5: 1}
    assert f_lambda_i(P((3,))) == {0: 1}


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_tableau_count_matches_hook_formula(lam):
    assert len(standard_tableaux(lam)) == hook_length_count(lam) == mn_character(lam, P((1,) * lam.size))


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_maj_generating_function_is_palindromic_shift(lam):
    # f_{lam,i} is supported in [b(lam), binom(n,2) - b(lam')]
    f = f_lambda_i(lam)
    b = sum(i * p for i, p in enumerate(lam.parts))
    bc = sum(i * p for i, p in enumerate(lam.conjugate().parts))
    n = lam.size
    assert min(f) == b and max(f) == n * (n - 1) // 2 - bc


def test_character_by_brute_force_for_s4():
    # chi^(3,1) = (#fixed points) - 1
    chi = irreducible_character(P((3, 1)))
    from torilab.partitions import cycle_type

    for perm in permutations(range(4)):
        fixed = sum(1 for i, p in enumerate(perm) if i == p)
        assert chi.values[cycle_type(perm)] == fixed - 1


@pytest.mark.parametrize("n", range(1, 6))
def test_multiplicity_lemma(n):
    report = verify_multiplicity_lemma(n)
    assert report.ok and report.checked == len(enumerate_partitions(n)) * (n * (n - 1) // 2 + 1)
