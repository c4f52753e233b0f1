from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torilab.charpoly import parse_char_poly
from torilab.coinvariant import ClassFunction
from torilab.errors import VerificationError
from torilab.exactmath import Poly, RationalFunction
from torilab.partitions import EMPTY, DoublePartition, Partition, enumerate_double_partitions, enumerate_partitions
from torilab.tori import (
    asymptotic_limit,
    asymptotic_limit_poly,
    count_tori,
    count_tori_a,
    count_tori_at,
    count_tori_bc,
    exp_form,
    geometric_tail,
    gl_order,
    lehrer_verify,
    normalized_statistic_at,
    sp_order,
    statistic_sum,
    verify_average_gf,
    verify_convergence,
    verify_euler_identity,
    verify_exp_identity,
)

q = RationalFunction.variable()


def test_group_orders():
    # |GL_2(F_q)| = (q^2-1)(q^2-q), |Sp_2(F_q)| = q(q^2-1)
    assert gl_order(2) == Poly([-1, 0, 1]) * Poly([0, -1, 1])
    assert gl_order(2)(3) == 48
    assert sp_order(1)(3) == 24


def test_count_small_cases():
    dp = DoublePartition.from_text
    assert count_tori_bc(dp("1|")) == (q + q * q) / 2
    assert count_tori_bc(dp("|1")) == (q * q - q) / 2
    # GL_2: split tori q(q+1)/2, nonsplit q(q-1)/2
    assert count_tori_a(Partition((1, 1))) == (q * q + q) / 2
    assert count_tori_a(Partition((2,))) == (q * q - q) / 2


@pytest.mark.parametrize("n", range(6))
def test_steinberg_counts(n):
    total_a = sum((count_tori("A", c) for c in enumerate_partitions(n)), RationalFunction(0))
    total_bc = sum((count_tori("BC", c) for c in enumerate_double_partitions(n)), RationalFunction(0))
    assert total_a == q ** (n * n - n)
    assert total_bc == q ** (2 * n * n)


@given(st.integers(0, 4).flatmap(lambda n: st.sampled_from(enumerate_double_partitions(n))),
       st.sampled_from([2, 3, 4, 5, 7]))
@settings(max_examples=40, deadline=None)
def test_counts_are_integers_at_prime_powers(c, qv):
    value = count_tori_at("BC", c, qv)
    assert value.denominator == 1 and value > 0
    assert value == count_tori_bc(c)(qv)


def test_lehrer_for_trivial_character():
    r = lehrer_verify("BC", 3, ClassFunction.trivial("BC", 3))
    assert r.ok and r.lhs == RationalFunction(1)


def test_lehrer_holds_for_arbitrary_class_functions():
    # both sides are linear in chi, so indicator functions of classes suffice
    for n in range(1, 5):
        for target in enumerate_partitions(n):
            chi = ClassFunction("A", n, {c: int(c == target) for c in enumerate_partitions(n)})
            assert lehrer_verify("A", n, chi).ok


def test_asymptotic_table_type_a():
    assert asymptotic_limit_poly("A", parse_char_poly("X1")) == q / (q - 1)
    assert asymptotic_limit_poly("A", parse_char_poly("binom:1,1| - X2")) == 1 / (q * (1 - 1 / q) * (1 - 1 / q**2))


def test_asymptotic_table_type_bc():
    P = parse_char_poly
    assert asymptotic_limit_poly("BC", P("X1")) == q / (2 * (q - 1))
    assert asymptotic_limit_poly("BC", P("X1 + Y1")) == q**2 / (q**2 - 1)
    assert asymptotic_limit_poly("BC", P("(X1+Y1)*(X1+Y1-1)/2 - X2 - Y2")) == q**4 / ((q**2 - 1) * (q**4 - 1))
    assert asymptotic_limit_poly("BC", P("X2 - Y2")) == q**2 / (2 * (q**4 - 1))


def test_asymptotic_limit_rejects_y_in_type_a():
    with pytest.raises(ValueError):
        asymptotic_limit("A", Partition((1,)), Partition((1,)))
    with pytest.raises(ValueError):
        statistic_sum("A", parse_char_poly("Y1"), 2)


def test_statistic_matches_direct_class_sum():
    # average of X1 over T(2,q) for GL_2: (2 * q(q+1)/2) / q^2
    assert normalized_statistic_at("A", parse_char_poly("X1"), 2, 3) == Fraction(2 * 6, 9)


def test_convergence_reports():
    r = verify_convergence("BC", parse_char_poly("X1 + Y1"), 8, 2)
    assert r.ok and all(a >= b for a, b in zip(r.diffs[2:], r.diffs[3:]))
    with pytest.raises(ValueError):
        verify_convergence("BC", parse_char_poly("X1"), 4, 1)


def test_convergence_failure_is_reported():
    # type A X2 at q = 3 sits at about 2.25 * 3^-n, just above the 2 * q^-n tolerance
    r = verify_convergence("A", parse_char_poly("X2"), 6, 3, strict=False)
    assert not r.ok and r.failures == [{"n": 6, "reason": "difference above tolerance"}]
    with pytest.raises(VerificationError):
        verify_convergence("A", parse_char_poly("X2"), 6, 3)


def test_product_identities():
    assert verify_exp_identity(8)
    assert verify_euler_identity(8, 24)
    assert exp_form("BC", 6) == geometric_tail("BC", 6)


@pytest.mark.parametrize("family", ["A", "BC"])
def test_average_gf(family):
    for n in range(4):
        for c in (enumerate_partitions(n) if family == "A" else enumerate_double_partitions(n)):
            mu, lam = (c, EMPTY) if family == "A" else (c.positive, c.negative)
            assert verify_average_gf(family, mu, lam, 4).ok
