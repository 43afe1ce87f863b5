from fractions import Fraction

import pytest

from oracles import binomial_direct, complex_v, lucas_u, lucas_v
from powersums import engines
from powersums.engines import Method, SequenceSlice
from powersums.quadfield import Kind, SequenceParams

S = SequenceParams


# -- worked examples ------------------------------------------------------------

def test_pair_recurrence_examples():
    assert engines.pair_recurrence(S(1, 1), 5) == (5, 11)
    assert engines.pair_recurrence(S(2, 1), 4) == (12, 34)
    assert engines.pair_recurrence(S(0, 3), 4) == (0, 18)


def test_v_closed_examples():
    assert engines.v_closed(S(1, 1), 5, "EXP2") == 11
    assert engines.v_closed(S(1, 1), 3, "EXP1") == 4
    assert engines.v_closed(S(3, -1), 2, "EXP2") == 7


def test_v_closed_rejects_zero_and_unknown_variant():
    with pytest.raises(ValueError):
        engines.v_closed(S(1, 1), 0)
    with pytest.raises(ValueError):
        engines.v_closed(S(1, 1), 3, "EXP9")


def test_u_closed_examples():
    assert engines.u_closed(S(1, 1), 5) == 5
    assert engines.u_closed(S(1, 1), 1) == 1
    assert engines.u_closed(S(2, 1), 4) == 12


def test_doubling_examples():
    assert engines.pair_doubling(S(1, 1), 6)[1] == 18
    assert engines.pair_doubling(S(1, 1), 5)[1] == 11
    for p, q in [(0, 0), (3, -7), (-2, 5)]:
        assert engines.pair_doubling(S(p, q), 0) == (0, 2)


def test_trace_and_ratio_examples():
    assert engines.v_trace(S(1, 1), 3) == 4
    assert engines.u_ratio(S(1, 1), 3) == 2
    assert engines.v_trace(S(-1, -1), 4) == -1
    assert engines.v_trace(S(5, 5), 2) == 35


def test_idenl_examples():
    assert engines.idenl_sides(4, 1) == (4, 4)
    assert engines.idenl_sides(4, 0) == (1, 1)
    lhs, rhs = engines.idenl_sides(6, 3)
    assert rhs == 2 and lhs == 2


def test_idenl_rejects_bad_indices():
    with pytest.raises(ValueError):
        engines.idenl_sides(0, 0)
    with pytest.raises(ValueError):
        engines.idenl_sides(5, 3)


# -- against independent oracles --------------------------------------------------

@pytest.mark.parametrize("p", range(-6, 7, 2))
@pytest.mark.parametrize("q", range(-6, 7, 3))
def test_every_method_matches_plain_loop(p, q):
    vs, us = lucas_v(p, q, 61), lucas_u(p, q, 61)
    for kind, ref in ((Kind.V, vs), (Kind.U, us)):
        params = S(p, q, kind)
        for method in engines.methods_for(params):
            assert [engines.compute(params, n, method) for n in range(61)] == ref, method


def test_small_n_against_complex_floats():
    for p in range(-3, 4):
        for q in range(-3, 4):
            for n in range(12):
                approx = complex_v(p, q, n)
                assert abs(approx - engines.pair_doubling(S(p, q), n)[1]) < 1e-6 * max(1, abs(approx))


def test_binom_matches_product_formula_and_is_zero_outside_range():
    for n in range(-3, 15):
        for k in range(-3, 15):
            assert engines.binom(n, k) == binomial_direct(n, k)


# -- invariants ---------------------------------------------------------------------

@pytest.mark.parametrize("q", range(-5, 6))
def test_p_zero_special_case(q):
    for n in range(40):
        v = engines.pair_doubling(S(0, q), n)[1]
        assert v == (0 if n % 2 else 2 * q ** (n // 2))


@pytest.mark.parametrize("p", range(-5, 6))
def test_q_zero_special_case(p):
    for n in range(1, 40):
        assert engines.compute(S(p, 0), n, Method.CLOSED_EXP3) == p ** n


@pytest.mark.parametrize("half_p", range(-4, 5))
def test_repeated_root(half_p):
    p = 2 * half_p
    params = S(p, -half_p * half_p)
    assert params.discriminant == 0
    for n in range(40):
        U, V = engines.pair_recurrence(params, n)
        assert V == 2 * Fraction(half_p) ** n
        assert U == (n * Fraction(half_p) ** (n - 1) if n else 0)
        assert engines.pair_doubling(params, n) == (U, V)
        assert engines.v_trace(params, n) == V
        assert engines.u_ratio(params, n) == U
        if n:
            for variant in ("EXP1", "EXP2", "EXP3"):
                assert engines.v_closed(params, n, variant) == V
            assert engines.u_closed(params, n) == U


def test_koshy_and_hirschhorn_forms():
    for n in range(1, 40):
        for k in range(n // 2 + 1):
            a, b = engines.koshy_sides(n, k)
            assert a == b
            a, b = engines.hirschhorn_sides(n, k)
            assert a == b


def test_methods_for_respects_kind_and_chebyshev_domain():
    v = engines.methods_for(S(1, 1, Kind.V))
    u = engines.methods_for(S(1, 1, Kind.U))
    assert Method.CLOSED_IDENF not in v and Method.CLOSED_EXP1 in v
    assert Method.CLOSED_IDENF in u and Method.CLOSED_EXP2 not in u
    assert Method.CHEBYSHEV not in engines.methods_for(S(0, 3))
    with pytest.raises(ValueError):
        engines.compute(S(1, 1, Kind.U), 3, Method.CLOSED_EXP1)


def test_slices():
    sl = engines.compute_slice(S(1, 1), 3, 7)
    assert isinstance(sl, SequenceSlice)
    assert sl.values == [4, 7, 11, 18, 29]
    assert sl[5] == 11
    assert sl.items()[0] == (3, 4)
    assert engines.compute_slice(S(2, 1, Kind.U), 0, 5, Method.DOUBLING).values == [0, 1, 2, 5, 12, 29]
    with pytest.raises(IndexError):
        sl[8]
    # every interior entry obeys the recurrence
    vals = engines.compute_slice(S(3, -2), 0, 30).values
    assert all(vals[i] == 3 * vals[i - 1] - 2 * vals[i - 2] for i in range(2, 31))
