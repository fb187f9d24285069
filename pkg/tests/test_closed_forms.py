import pytest

from jaco import oracles
from jaco.closed_forms import (
    chromatic_closed_form,
    covering_number,
    gamma_recursion,
    gamma_sequence,
    independence_number,
    independence_trace,
    murtage_bound_check,
)
from jaco.jacograph import build_jaco


@pytest.mark.parametrize("n,chosen", [(1, (1,)), (5, (1, 3)), (10, (1, 3, 6))])
def test_trace(n, chosen):
    assert independence_trace(build_jaco(n)).chosen == chosen


@pytest.mark.parametrize("n", range(1, 31))
def test_alpha_against_oracle(n):
    jg = build_jaco(n)
    trace = independence_trace(jg)
    assert all(not jg.underlying.has_edge(u, v) for u in trace.chosen for v in trace.chosen)
    assert trace.alpha == oracles.alpha_oracle(jg.underlying)


@pytest.mark.parametrize("n,beta", [(1, 0), (5, 3), (10, 7)])
def test_covering_number(n, beta):
    jg = build_jaco(n)
    assert covering_number(jg) == beta
    assert oracles.cover_oracle(jg.underlying) == beta


def test_alpha_non_decreasing_and_cover_complements():
    prev = 0
    for n in range(1, 61):
        jg = build_jaco(n)
        a = independence_number(jg)
        assert a >= prev
        assert a + covering_number(jg) == n
        prev = a


@pytest.mark.parametrize("n,chi", [(1, 1), (2, 2), (5, 3), (6, 3)])
def test_chi_examples(n, chi):
    assert chromatic_closed_form(build_jaco(n)) == chi


@pytest.mark.parametrize("n", range(1, 16))
def test_chi_against_oracle(n):
    jg = build_jaco(n)
    assert chromatic_closed_form(jg) == oracles.chi_oracle(jg.underlying)


@pytest.mark.parametrize("n,g", [(1, 1), (3, 1), (4, 2), (8, 2), (9, 2), (12, 3), (13, 3)])
def test_gamma_recursion_examples(n, g):
    assert gamma_recursion(n) == g


@pytest.mark.parametrize("n", range(1, 31))
def test_gamma_recursion_against_oracle(n):
    assert gamma_recursion(n) == oracles.gamma_oracle(build_jaco(n).underlying)


def test_gamma_sequence_matches_pointwise():
    seq = gamma_sequence(60)
    assert seq[1:] == tuple(gamma_recursion(n) for n in range(1, 61))


def test_gamma_recursion_rejects_zero():
    with pytest.raises(ValueError):
        gamma_recursion(0)


@pytest.mark.parametrize("n,m", [(1, 0), (6, 2), (9, 3), (12, 1)])
def test_murtage_bound_check(n, m):
    assert murtage_bound_check(n) == (True, m)


def test_gamma_recursion_for_large_orders():
    seq = gamma_sequence(1000)
    assert seq[1000] == gamma_recursion(1000)
    assert all(a <= b for a, b in zip(seq[1:], seq[2:]))
