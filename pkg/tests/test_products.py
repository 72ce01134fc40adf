"""Eta, Weber, generalized eta, theta and triple-product builders."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nahmvec.cyclo import cyclo_embed
from nahmvec.nahm import kanade_russell_sum
from nahmvec.products import (
    ThetaMismatch,
    _theta_product,
    _theta_sum,
    bernoulli2,
    crank_gf,
    eta_series,
    gen_dedekind_eta,
    j_product,
    theta_g,
    theta_h,
    weber_f,
    weber_f1,
    weber_f2,
)
from nahmvec.series import INF, PuiseuxSeries, compare_to_order, invert, mul, pochhammer, substitute_q_power

half = Fraction(1, 2)


def same(a, b, T):
    return compare_to_order(a, b, T) is None


def bilateral(a, m, T):
    """sum_n (-1)^n q^{m n(n-1)/2 + a n}, summed over enough n."""
    terms: dict[Fraction, int] = {}
    for n in range(-60, 61):
        e = Fraction(m) * n * (n - 1) / 2 + Fraction(a) * n
        if e < T:
            terms[e] = terms.get(e, 0) + (-1) ** (n % 2)
    den = math.lcm(*(e.denominator for e in terms))
    return PuiseuxSeries({int(e * den): c for e, c in terms.items()}, den, T)


def test_eta_pentagonal_head():
    e = eta_series(1, 3)
    assert e.order() == Fraction(1, 24)
    assert [c for _, c in e.items()] == [1, -1, -1]
    assert eta_series(24, 40).order() == 1


def test_eta_substitution():
    assert same(substitute_q_power(eta_series(1, 20), 3), eta_series(3, 60), 60)


def test_capparelli_eta_quotient():
    T = 60
    num = mul(eta_series(4, T + 5), mul(eta_series(6, T + 5), eta_series(6, T + 5)))
    den = mul(eta_series(2, T + 5), mul(eta_series(3, T + 5), eta_series(12, T + 5)))
    x1 = mul(num, invert(den))
    a1 = pochhammer(2, -1, 6, INF, T)
    for a in (3, 4, 6):
        a1 = mul(a1, pochhammer(a, -1, 6, INF, T))
    assert same(x1, a1.shift(Fraction(-1, 24)), T - 1)


def test_weber_leading_terms():
    assert weber_f2(10).order() == Fraction(1, 24)
    f = weber_f(30)
    assert f.coeff(Fraction(-1, 48)) == 1
    assert f.coeff(Fraction(-1, 48) + half) == 1
    assert weber_f1(30).coeff(Fraction(-1, 48) + half) == -1


def test_weber_f1_f2_product():
    T = 30
    direct = mul(pochhammer(half, 1, 1, INF, T), pochhammer(1, -1, 1, INF, T)).shift(Fraction(-1, 48) + Fraction(1, 24))
    assert same(mul(weber_f1(T), weber_f2(T)), direct, T - 1)


def test_bernoulli_and_gen_eta_order():
    assert bernoulli2(half) == Fraction(-1, 12)
    assert gen_dedekind_eta(2, 1, 0, 10).order() == Fraction(-1, 24)


def test_gen_eta_matches_kr_product():
    T = 45
    e1 = substitute_q_power(gen_dedekind_eta(9, 1, 0, Fraction(T + 2, 9)), 9)
    e3 = substitute_q_power(gen_dedekind_eta(9, 3, 0, Fraction(T + 2, 9)), 9)
    x1 = invert(mul(e1, e3))
    b1 = kanade_russell_sum(1, T).to_ring(9)
    assert same(x1, b1.shift(Fraction(-1, 18)), T - 1)


@pytest.mark.parametrize("N,g,h", [(5, 1, 2), (9, 1, 0), (9, 4, 7), (12, 5, 1), (7, 3, 3)])
def test_gen_eta_index_rules(N, g, h):
    T = 12
    base = gen_dedekind_eta(N, g, h, T)
    assert base == gen_dedekind_eta(N, g, h + N, T)
    shifted = gen_dedekind_eta(N, g + N, h, T)
    scale = -(cyclo_embed(-h, N) if N > 2 else 1)
    assert same(shifted, base * scale, min(shifted.trunc, base.trunc))


def test_gen_eta_rejects_zero_index():
    with pytest.raises(ValueError):
        gen_dedekind_eta(6, 6, 12, 5)


def test_theta_g_01_and_vanishing():
    g = theta_g(0, 1, 17)
    assert [(e, c) for e, c in g.items()] == [(0, 1), (1, -2), (4, 2), (9, -2), (16, 2)]
    for m in (1, Fraction(3, 2), 4):
        assert theta_g(m, m, 20).is_zero()


def test_hg_double_on_h12():
    assert same(substitute_q_power(theta_h(1, 2, 15), 2), theta_h(2, 4, 30), 30)


def test_crank_at_one_is_partition_gf():
    T = 30
    assert same(crank_gf(1, T), invert(pochhammer(1, 1, 1, INF, T)), T)


def test_crank_conjugate_roots_agree():
    # F(z) = F(1/z); conjugation maps zeta_9 to zeta_9^-1
    T = 20
    z = cyclo_embed(1, 9)
    a, b = crank_gf(z, T), crank_gf(z.inverse(), T)
    assert same(a, b, T)


def test_j15_head_and_symmetry():
    j = j_product(1, 5, 10)
    assert [(int(e), c) for e, c in j.items()] == [(0, 1), (1, -1), (4, -1), (7, 1)]
    assert same(j, bilateral(1, 5, 10), 10)
    for m in (5, 7, 27):
        for a in range(1, m):
            assert j_product(a, m, 40) == j_product(m - a, m, 40)
    with pytest.raises(ValueError):
        j_product(5, 5, 10)


def test_j15_jtp_order_40():
    assert same(j_product(1, 5, 40), bilateral(1, 5, 40), 40)


# properties ---------------------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12).flatmap(lambda m2: st.tuples(st.just(m2), st.integers(1, m2 - 1))))
def test_jtp_random(pair):
    m2, a2 = pair
    m, a = Fraction(m2, 2), Fraction(a2, 2)
    T = 30
    assert same(j_product(a, m, T), bilateral(a, m, T), T)


half_integers = st.integers(-36, 36).map(lambda x: Fraction(x, 2))
theta_m = st.integers(1, 12).map(lambda x: Fraction(x, 2))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["g", "h"]), half_integers, theta_m)
def test_theta_sum_equals_product(kind, j, m):
    T = 30
    assert same(_theta_sum(kind, j, m, T), _theta_product(kind, j, m, T), T)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_theta_period(data):
    m = data.draw(theta_m)
    j = data.draw(st.integers(-int(6 * m), int(6 * m)).map(lambda x: Fraction(x, 2)))
    T = 25
    g, h = theta_g(j, m, T), theta_h(j, m, T)
    assert same(g, theta_g(-j, m, T), T)
    assert same(g, -theta_g(2 * m + j, m, T), T)
    assert same(h, theta_h(-j, m, T), T)
    assert same(h, theta_h(2 * m + j, m, T), T)


@settings(max_examples=60, deadline=None)
@given(half_integers, theta_m)
def test_theta_level_change(j, m):
    T = 40
    a = theta_h(2 * j, 4 * m, T)
    b = theta_h(4 * m - 2 * j, 4 * m, T)
    assert same(theta_h(j, m, T), a + b, T)
    assert same(theta_g(j, m, T), a - b, T)


@settings(max_examples=60, deadline=None)
@given(half_integers, theta_m)
def test_theta_doubling(j, m):
    T = 20
    assert same(substitute_q_power(theta_h(j, m, T), 2), theta_h(2 * j, 2 * m, 2 * T), 2 * T)


def test_theta_check_catches_bad_product(monkeypatch):
    import nahmvec.products as products

    monkeypatch.setattr(products, "_theta_product", lambda kind, j, m, T: _theta_sum(kind, j, m, T) * 2)
    with pytest.raises(ThetaMismatch):
        theta_g(1, 3, 10)
