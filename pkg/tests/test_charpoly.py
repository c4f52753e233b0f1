from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torilab.charpoly import (
    CharacterPolynomial,
    CharPolyParseError,
    binom_basis_element,
    canonical_rep_char_polys,
    evaluate,
    from_binomial_basis,
    parse_char_poly,
    to_binomial_basis,
)
from torilab.partitions import DoublePartition, Partition, enumerate_double_partitions

X, Y = CharacterPolynomial.X, CharacterPolynomial.Y


def test_evaluate_on_classes():
    c = DoublePartition.from_text("2,1,1|1")
    assert evaluate(X(1), c) == 2
    assert evaluate(Y(1), c) == 1
    assert evaluate(X(2) * Y(1), c) == 1
    assert evaluate(X(1), Partition((1, 1, 1))) == 3


def test_degree_is_weighted():
    assert (X(1) ** 2 * Y(3)).degree() == 5
    assert CharacterPolynomial.constant(4).degree() == 0
    assert CharacterPolynomial().degree() == -1


def test_format_and_parse_roundtrip():
    P = Fraction(1, 2) * X(1) ** 2 * Y(3) - X(2)
    assert P.format() == "-X2 + 1/2*X1^2*Y3"
    assert parse_char_poly(P.format()) == P
    assert parse_char_poly("1/2*X1^2*Y3 - X2") == P


def test_parser_features():
    assert parse_char_poly("(X1 + Y1)^2") == X(1) ** 2 + 2 * X(1) * Y(1) + Y(1) ** 2
    assert parse_char_poly("X1*(X1 - 1)/2") == binom_basis_element(Partition((1, 1)))
    assert parse_char_poly("binom:2,1|3") == binom_basis_element(Partition((2, 1)), Partition((3,)))
    assert parse_char_poly("Cn") == X(1) - Y(1)


@pytest.mark.parametrize("text,offset", [("X1 +", 4), ("X1 $ 2", 3), ("Foo", 0), ("X1 / X2", 3), ("2*(X1", 5)])
def test_parse_errors_cite_offsets(text, offset):
    with pytest.raises(CharPolyParseError) as info:
        parse_char_poly(text)
    assert info.value.offset == offset


def test_binomial_basis_of_presets():
    basis = to_binomial_basis(canonical_rep_char_polys()["Sym2Cn"])
    expected = {"1|": 1, "1,1|": 1, "|1": 1, "|1,1": 1, "2|": 1, "|2": -1, "1|1": -1}
    assert {dp.to_text(): int(c) for dp, c in basis.items()} == expected


def test_binom_element_values():
    # binom(X,(1,1)) binom(Y,(2)) on class (1,1,1 | 2) is C(3,2) * C(1,1)
    P = binom_basis_element(Partition((1, 1)), Partition((2,)))
    assert evaluate(P, DoublePartition.from_text("1,1,1|2")) == comb(3, 2)
    assert P.degree() == 4


def test_canonical_presets_have_expected_dimensions():
    polys = canonical_rep_char_polys()
    for n in range(6):
        ident = DoublePartition.from_text(",".join(["1"] * n) + "|")
        assert evaluate(polys["Cn"], ident) == n
        assert evaluate(polys["Sym2Cn"], ident) == comb(n + 1, 2)
        assert evaluate(polys["Wedge2Cn"], ident) == comb(n, 2)
        assert evaluate(polys["Wedge3Cn"], ident) == comb(n, 3)


double_parts = st.integers(0, 4).flatmap(lambda n: st.sampled_from(enumerate_double_partitions(n)))
basis_combos = st.dictionaries(double_parts, st.fractions(-5, 5, max_denominator=4), max_size=4)


@given(basis_combos)
@settings(max_examples=60, deadline=None)
def test_binomial_basis_roundtrip(coeffs):
    P = from_binomial_basis(coeffs)
    assert to_binomial_basis(P) == {k: v for k, v in coeffs.items() if v}


@given(basis_combos, basis_combos, double_parts)
@settings(max_examples=40, deadline=None)
def test_evaluation_is_a_ring_map(a, b, c):
    P, Q = from_binomial_basis(a), from_binomial_basis(b)
    assert evaluate(P * Q, c) == evaluate(P, c) * evaluate(Q, c)
    assert evaluate(P - Q, c) == evaluate(P, c) - evaluate(Q, c)
