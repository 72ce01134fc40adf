"""Truncated Puiseux series arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nahmvec.cyclo import CycloElement, cyclo_embed
from nahmvec.series import (
    INF,
    PuiseuxSeries,
    RingMismatch,
    TruncationError,
    add,
    compare_to_order,
    invert,
    mul,
    negative_floor,
    one,
    pochhammer,
    series_from_term,
    substitute_q_power,
    zero,
)


def poly(coeffs, den=1, trunc=INF):
    return PuiseuxSeries(dict(enumerate(coeffs)), den, trunc)


def agree(a, b):
    T = min(a.trunc, b.trunc)
    if T == INF:
        return a == b
    return compare_to_order(a, b, T) is None


def restricted_partitions(residues, modulus, N):
    """p(n) for parts whose residue mod `modulus` lies in `residues`, n < N."""
    p = [1] + [0] * (N - 1)
    for part in range(1, N):
        if part % modulus in residues:
            for n in range(part, N):
                p[n] += p[n - part]
    return p


def pentagonal(N):
    out = [0] * N
    for k in range(-N, N + 1):
        e = k * (3 * k - 1) // 2
        if 0 <= e < N:
            out[e] += (-1) ** k
    return out


@st.composite
def series(draw, invertible=False):
    den = draw(st.sampled_from([1, 2, 3]))
    keys = draw(st.lists(st.integers(-2, 10), min_size=1 if invertible else 0, max_size=6, unique=True))
    terms = {k: draw(st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)) for k in keys}
    if invertible or draw(st.booleans()):
        lo = min(keys, default=0)
        trunc = Fraction(draw(st.integers(lo + 1, lo + 14)), den)
    else:
        trunc = INF
    return PuiseuxSeries(terms, den, trunc)


# named examples -----------------------------------------------------------

def test_series_from_term():
    assert series_from_term(1, 0, 1) == one()
    s = series_from_term(1, Fraction(11, 60), 1)
    assert s.den == 60 and s.order() == Fraction(11, 60)
    z9 = cyclo_embed(1, 9)
    c = series_from_term(9, 0, z9)
    assert c.coeff(0) == z9 and c.ring == 9


def test_add_cancels_and_merges_lattices():
    assert add(poly([1, 1]), poly([1, -1])) == poly([2])
    s = series_from_term(1, Fraction(1, 2), 1) + series_from_term(1, Fraction(1, 3), 1)
    assert s.den == 6


def test_truncation_propagates_through_mul():
    a = poly([1, 1], trunc=5)
    b = series_from_term(1, 2, 1, trunc=7)
    assert mul(a, b).trunc == min(5 + 2, 7 + 0)


def test_geometric_inverse():
    g = invert(poly([1, -1], trunc=20))
    assert compare_to_order(g, poly([1] * 20), 20) is None
    assert compare_to_order(mul(poly([1, -1]), g), one(), 20) is None


def test_eta_product_times_inverse():
    e = pochhammer(1, None, 1, INF, 50)
    assert compare_to_order(mul(e, invert(e)), one(), 50) is None


def test_euler_pentagonal():
    e = pochhammer(1, None, 1, INF, 60)
    assert [e.coeff(n) for n in range(60)] == pentagonal(60)


def test_rr_product_inverse_counts_partitions():
    G = invert(mul(pochhammer(1, None, 5, INF, 80), pochhammer(4, None, 5, INF, 80)))
    assert [G.coeff(n) for n in range(80)] == restricted_partitions({1, 4}, 5, 80)
    assert [G.coeff(n) for n in range(7)] == [1, 1, 1, 1, 2, 2, 3]


def test_invert_monomial_prefix():
    a = mul(series_from_term(1, Fraction(1, 2), 1), poly([1, 1], trunc=12))
    inv = invert(a)
    assert inv.order() == Fraction(-1, 2)
    assert [inv.coeff(Fraction(-1, 2) + n) for n in range(6)] == [1, -1, 1, -1, 1, -1]


def test_invert_rejects_zero_and_exact_polynomials():
    with pytest.raises(ZeroDivisionError):
        invert(zero(1, 5))
    with pytest.raises(TruncationError):
        invert(poly([1, -1]))


def test_substitute_q_power_doubles_exponents():
    assert substitute_q_power(poly([1, 1]), 2) == poly([1, 0, 1])
    assert substitute_q_power(poly([1, 1], trunc=4), 3).trunc == 12


def test_pochhammer_edge_cases():
    assert pochhammer(Fraction(7, 3), None, 2, 0) == one()
    neg = pochhammer(-5, -1, 2, 3)
    assert neg.coeff(-5) == 1
    assert agree(neg, mul(mul(poly([1]) + series_from_term(1, -5, 1), one() + series_from_term(1, -3, 1)),
                          one() + series_from_term(1, -1, 1)))
    with pytest.raises(ValueError):
        pochhammer(0, None, 1, INF, 10)


def test_compare_to_order_reports_first_mismatch():
    assert compare_to_order(poly([1, 1]), poly([1, 1, 0, 0, 0, 1]), 5) is None
    m = compare_to_order(poly([1, 1]), poly([1, -1]), 5)
    assert (m.exponent, m.left, m.right) == (1, 1, -1)
    with pytest.raises(TruncationError):
        compare_to_order(poly([1], trunc=3), poly([1]), 4)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        add(one(1), one(9))


def test_negative_floor_guard():
    with pytest.raises(OverflowError):
        series_from_term(1, -11, 1)
    with negative_floor(-40):
        assert series_from_term(1, -30, 1).order() == -30


def test_cyclotomic_coefficients():
    z = cyclo_embed(1, 9)
    a = pochhammer(1, z, 1, INF, 15)
    b = pochhammer(1, z.inverse(), 1, INF, 15)
    ab = mul(a, b)
    assert ab.ring == 9
    # (zq;q)(q/z;q) has coefficients in the real subfield: fixed by conjugation
    for _, c in ab.items():
        assert c == c.conjugate()
    assert isinstance(ab.coeff(1), CycloElement)


# properties ---------------------------------------------------------------

@settings(max_examples=500, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert agree(a + b, b + a)
    assert agree(a * b, b * a)
    assert agree((a + b) + c, a + (b + c))
    assert agree((a * b) * c, a * (b * c))
    assert agree(a * (b + c), a * b + a * c)
    assert agree(a + zero(), a)
    assert agree(a * one(), a)


@settings(max_examples=500, deadline=None)
@given(series(invertible=True))
def test_invert_is_two_sided(a):
    inv = invert(a)
    for p in (mul(a, inv), mul(inv, a)):
        assert p.trunc > 0
        assert compare_to_order(p, one(), p.trunc) is None


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=Fraction(1, 6), max_value=4, max_denominator=6),
       st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(2), Fraction(5)]),
       st.integers(0, 10), st.sampled_from([1, -1]))
def test_pochhammer_splicing(a, step, n, u):
    T = 25
    head = pochhammer(a, u, step, n, T)
    tail = pochhammer(a + n * step, u, step, INF, T)
    assert compare_to_order(mul(head, tail), pochhammer(a, u, step, INF, T), T) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(-3, 3), st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(2)]),
       st.integers(0, 6), st.integers(0, 6))
def test_finite_pochhammer_splicing(a, step, n, m):
    with negative_floor(-60):
        lhs = pochhammer(a, -1, step, n + m)
        rhs = mul(pochhammer(a, -1, step, n), pochhammer(a + n * step, -1, step, m))
    assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(series(), st.integers(1, 4), st.fractions(min_value=Fraction(1, 3), max_value=3, max_denominator=3))
def test_substitution_composes(a, j, k):
    with negative_floor(-100):
        assert substitute_q_power(substitute_q_power(a, j), k) == substitute_q_power(a, j * k)
