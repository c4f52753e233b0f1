from itertools import combinations, combinations_with_replacement

import pytest

from torilab.charpoly import canonical_rep_char_polys, evaluate, parse_char_poly
from torilab.coinvariant import (
    ClassFunction,
    classes,
    graded_char,
    graded_char_bc_oracle,
    graded_coeffs_bc,
    inner_product,
    multiplicities,
    oracle_for_class,
    q_char_polys,
    signed_permutation_matrix,
    verify_stable_range,
)
from torilab.exactmath import Poly
from torilab.partitions import DoublePartition, enumerate_double_partitions, signed_representative


def test_poincare_polynomials():
    # identity class gives the Poincare polynomial prod [2i]_z, resp. prod [i]_z
    assert graded_char("BC", 2).polys[DoublePartition.from_text("1,1|")] == Poly([1, 2, 2, 2, 1])
    assert graded_char("A", 3).polys[graded_char("A", 3).identity_class()] == Poly([1, 2, 2, 1])


def test_small_bc_values():
    G = graded_char("BC", 1)
    assert G.polys[DoublePartition.from_text("|1")] == Poly([1, -1])
    assert graded_coeffs_bc(DoublePartition.from_text("|1"), 4) == (1, -1, 0, 0, 0)


@pytest.mark.parametrize("family,n_max", [("BC", 4), ("A", 5)])
def test_graded_character_matches_oracle(family, n_max):
    for n in range(n_max + 1):
        G = graded_char(family, n)
        for c in classes(family, n):
            assert G.polys[c] == oracle_for_class(family, c)


def test_oracle_on_random_words_of_the_same_class():
    # the oracle depends only on the class, not the representative
    word = (-2, 3, 1)
    from torilab.partitions import signed_cycle_type

    c = signed_cycle_type(word)
    assert graded_char_bc_oracle(word) == graded_char("BC", 3).polys[c]


def test_regular_representation():
    # R_n is the regular representation: sum over i of the characters
    for n in range(4):
        G = graded_char("BC", n)
        for c, p in G.polys.items():
            total = sum(p.coeffs)
            assert total == (G.polys[G.identity_class()](1) if c == G.identity_class() else 0)


def _trace(m, power):
    """Brute-force character of Sym^2, wedge^2, wedge^3 from the matrix."""
    n = len(m)
    if power == "sym2":
        pairs = list(combinations_with_replacement(range(n), 2))
    elif power == "wedge2":
        pairs = list(combinations(range(n), 2))
    else:
        pairs = list(combinations(range(n), 3))
    if power == "sym2":
        return sum(m[i][i] * m[j][j] + (m[i][j] * m[j][i] if i != j else 0) for i, j in pairs)
    if power == "wedge2":
        return sum(m[i][i] * m[j][j] - m[i][j] * m[j][i] for i, j in pairs)
    total = 0
    for i, j, k in pairs:
        idx = (i, j, k)
        sub = [[m[a][b] for b in idx] for a in idx]
        total += (sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                  - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                  + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]))
    return total


@pytest.mark.parametrize("name,power", [("Sym2Cn", "sym2"), ("Wedge2Cn", "wedge2"), ("Wedge3Cn", "wedge3")])
def test_presets_match_brute_force_traces(name, power):
    P = canonical_rep_char_polys()[name]
    for n in range(5):
        for c in enumerate_double_partitions(n):
            m = signed_permutation_matrix(signed_representative(c))
            assert evaluate(P, c) == _trace(m, power), (name, c)


def test_inner_product_orthonormal_on_linear_characters():
    triv = ClassFunction.trivial("BC", 3)
    one = ClassFunction.from_char_poly(parse_char_poly("1"), "BC", 3)
    assert inner_product(triv, one) == 1
    Cn = ClassFunction.from_char_poly(parse_char_poly("Cn"), "BC", 3)
    assert inner_product(Cn, Cn) == 1


def test_class_function_validation():
    with pytest.raises(ValueError):
        ClassFunction("BC", 2, {DoublePartition.from_text("2|"): 1})
    with pytest.raises(ValueError):
        inner_product(ClassFunction.trivial("A", 2), ClassFunction.trivial("BC", 2))


def test_multiplicities_of_trivial_rep():
    # the trivial representation occurs only in degree 0
    m = multiplicities(ClassFunction.trivial("BC", 3))
    assert m[0] == 1 and all(x == 0 for x in m[1:])


def test_q_polys_low_degree():
    Q = q_char_polys(2)
    assert Q[0] == parse_char_poly("1")
    assert Q[1] == parse_char_poly("X1 - Y1")
    assert Q[2] == parse_char_poly("-1 + 1/2*X1 + 1/2*Y1 + 1/2*X1^2 + 1/2*Y1^2 - X1*Y1 + X2 - Y2")


@pytest.mark.parametrize("n", range(4))
def test_stable_range_is_sharp(n):
    r = verify_stable_range(n)
    assert r.ok and r.agree_through == 2 * n + 1 and r.first_mismatch[0] == 2 * n + 2


def test_sharpness_witnesses():
    Q = q_char_polys(4)
    empty = DoublePartition.from_text("|")
    assert evaluate(Q[2], empty) != 0  # R_0^2 = 0
    assert any(evaluate(Q[4], c) != 0 for c in enumerate_double_partitions(1))  # R_1^4 = 0


def test_q4_with_a_duplicated_term_disagrees():
    # repeating the -1/2*Y1^2*Y2 term of Q_4 breaks agreement with R_n^4
    Q4 = q_char_polys(4)[4]
    literal = Q4 - parse_char_poly("1/2*Y1^2*Y2")
    # the extra term needs Y1 >= 2 and Y2 >= 1, so it first shows up on B_4
    G = graded_char("BC", 4)
    assert all(evaluate(Q4, c) == p[4] for c, p in G.polys.items())
    assert any(evaluate(literal, c) != p[4] for c, p in G.polys.items())
