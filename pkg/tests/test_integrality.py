from fractions import Fraction as Fr
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rational_power_sum_scan
from powersums import engines
from powersums.integrality import (
    DiffStatus,
    DiffVerdict,
    RationalPairZ,
    SumVerdict,
    WitnessSearchExhausted,
    decide_diff,
    decide_sum,
    footnote_family,
    footnote_minimal_x,
    gcd_dichotomy_check,
    is_prime,
    p_poly,
    prime_factors,
    prime_witness,
)
from powersums.quadfield import QuadElement as Q, SequenceParams as S

PHI = Q(Fr(1, 2), Fr(1, 2), 5)
HALF_I = Q(Fr(1, 2), Fr(1, 2), -1)


def test_decide_sum_examples():
    v = decide_sum(PHI, -PHI.inverse())
    assert v.integral and v.recovered == S(1, 1) and v.witness is None
    v = decide_sum(Q(Fr(3, 2)), Q(Fr(1, 2)))
    assert not v.integral and v.witness == 2
    assert decide_sum(HALF_I, HALF_I.conjugate()).witness == 4


def test_decide_sum_non_conjugate_pair():
    assert decide_sum(PHI, PHI).witness == 1
    # trace integral but squares irrational
    assert decide_sum(PHI, 1 - PHI + Q.sqrt(5)).witness in (1, 2)


def test_decide_sum_mismatched_radicands():
    with pytest.raises(ValueError):
        decide_sum(PHI, Q.sqrt(2))


def test_sum_verdict_exactly_one_field():
    with pytest.raises(ValueError):
        SumVerdict(True)
    with pytest.raises(ValueError):
        SumVerdict(False, recovered=S(1, 1), witness=2)


@pytest.mark.parametrize("p", range(-5, 6))
@pytest.mark.parametrize("q", range(-5, 6))
def test_decide_sum_soundness_on_conjugate_roots(p, q):
    D = p * p + 4 * q
    r, s = Q(Fr(p, 2), Fr(1, 2), D), Q(Fr(p, 2), Fr(-1, 2), D)
    v = decide_sum(r, s)
    assert v.integral and v.recovered == S(p, q)
    for n in range(51):
        assert r ** n + s ** n == engines.compute(v.recovered, n)


def test_decide_sum_against_scan_small_grid():
    for c in (2, 3):
        for a in range(-8, 9):
            for b in range(-8, 9):
                x, y = Fr(a, c), Fr(b, c)
                failures = rational_power_sum_scan(x, y, 1, 12)
                v = decide_sum(Q(x), Q(y))
                assert v.integral == (not failures)
                if failures:
                    assert v.witness in (1, 2, 4) and v.witness in failures


def test_decide_diff_examples():
    v = decide_diff(Q(Fr(3, 2)), Q(Fr(1, 2)))
    assert v.status is DiffStatus.NOT_INTEGRAL and v.witness == 3
    assert v.prime_bound == 3
    assert decide_diff(Q(5), Q(5)).status is DiffStatus.TRIVIAL_EQUAL
    assert decide_diff(Q(5), Q(-2)).status is DiffStatus.BOTH_INTEGERS
    v = decide_diff(PHI, PHI - 1)
    assert v.witness == 2 and v.prime_bound is None
    assert decide_diff(HALF_I, HALF_I.conjugate()).witness == 1


def test_decide_diff_cap():
    a, b = Q(Fr(33, 2)), Q(Fr(1, 2))
    assert decide_diff(a, b).witness == 7 == _first_failure(2, 5)
    with pytest.raises(WitnessSearchExhausted):
        decide_diff(a, b, cap=6)


def test_diff_verdict_integral_flag():
    assert DiffVerdict(DiffStatus.BOTH_INTEGERS).integral
    assert not DiffVerdict(DiffStatus.NOT_INTEGRAL, witness=1).integral


def test_p_poly_examples():
    assert p_poly(3, 1, 3) == 13
    assert p_poly(9, -4, 1) == 1
    assert p_poly(2, 1, 5) == 31
    with pytest.raises(ValueError):
        p_poly(2, 2, 3)
    for x in range(-6, 7):
        for y in range(-6, 7):
            if x != y:
                for p in range(1, 8):
                    assert p_poly(x, y, p) * (x - y) == x ** p - y ** p


def test_gcd_dichotomy_examples():
    assert gcd_dichotomy_check(3, 1, 3) == 1
    assert gcd_dichotomy_check(4, 1, 3) == 3
    assert gcd_dichotomy_check(5, 2, 5) == gcd(3, 1031) == 1
    with pytest.raises(ValueError):
        gcd_dichotomy_check(4, 2, 3)
    with pytest.raises(ValueError):
        gcd_dichotomy_check(4, 1, 4)


def test_prime_witness_examples():
    assert prime_witness(RationalPairZ(3, 1, 2)) == (3, True)
    assert prime_witness(RationalPairZ(5, 1, 2)) == (3, True)
    assert prime_witness(RationalPairZ(7, 1, 6)) == (5, True)


def test_prime_witness_needs_large_enough_prime():
    # 2^3 divides 33^3 - 1, so the smallest prime above 2 is not enough here
    assert (33 ** 3 - 1) % 8 == 0
    assert prime_witness(RationalPairZ(33, 1, 2)) == (7, True)


def test_prime_witness_preconditions():
    with pytest.raises(ValueError):
        prime_witness(RationalPairZ(4, 1, 2))
    with pytest.raises(ValueError):
        prime_witness(RationalPairZ(3, 3, 2))
    with pytest.raises(ValueError):
        prime_witness(RationalPairZ(3, 1, 1))


def test_normalization():
    assert RationalPairZ(6, 4, 2).normalized() == RationalPairZ(3, 2, 1)
    assert RationalPairZ(9, 3, 2).normalized() == RationalPairZ(3, 1, 2)
    assert RationalPairZ(3, 1, -2).normalized() == RationalPairZ(-3, -1, 2)
    assert RationalPairZ.from_rationals(Fr(1, 2), Fr(1, 3)) == RationalPairZ(3, 2, 6)


def test_small_number_theory():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(-97) == [97]


def _first_failure(z, m):
    x, n = z ** m + 1, 1
    while (x ** n - 1) % z ** n == 0:
        n += 1
    return n


def test_footnote_family_examples():
    assert footnote_family(2, 2) == (2, 3)
    assert footnote_family(3, 1) == (1, 2)
    assert footnote_family(2, 5) == (6, 7)
    # integrality can outlast m
    assert footnote_family(3, 2) == (3, 4)


@pytest.mark.parametrize("z", [2, 3, 5])
@pytest.mark.parametrize("m", range(1, 9))
def test_footnote_family_grid(z, m):
    ok_through, first = footnote_family(z, m)
    assert ok_through >= m and first == ok_through + 1
    assert first == _first_failure(z, m)


def test_footnote_family_rejects_bad_input():
    with pytest.raises(ValueError):
        footnote_family(1, 3)
    with pytest.raises(ValueError):
        footnote_family(2, 0)


@pytest.mark.slow
def test_footnote_minimal_x():
    # frozen from an exhaustive scan; for m = 2 the smallest x is 3, not 2^2 + 1
    assert footnote_minimal_x(2, 2, 200) == (3, 1)
    assert footnote_minimal_x(2, 3, 200) == (9, 1)
    assert footnote_minimal_x(2, 5, 200) == (33, 1)
    assert footnote_minimal_x(2, 5, 20) is None
    assert footnote_minimal_x(3, 3, 200, fixed_y=1) == (10, 1)


fractions = st.builds(Fr, st.integers(-60, 60), st.integers(1, 9))


@settings(max_examples=300, deadline=None)
@given(fractions, fractions)
def test_decide_diff_always_finds_minimal_witness(x, y):
    v = decide_diff(Q(x), Q(y))
    if x == y:
        assert v.status is DiffStatus.TRIVIAL_EQUAL
    elif x.denominator == y.denominator == 1:
        assert v.status is DiffStatus.BOTH_INTEGERS
    else:
        failures = rational_power_sum_scan(x, y, -1, v.witness)
        assert failures and failures[0] == v.witness
        if v.prime_bound is not None:
            assert v.witness <= v.prime_bound


@settings(max_examples=200, deadline=None)
@given(st.integers(-30, 30), st.integers(-30, 30), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_gcd_dichotomy_property(x, y, p):
    if x == y or gcd(x, y) != 1:
        return
    assert gcd_dichotomy_check(x, y, p) in (1, p)
