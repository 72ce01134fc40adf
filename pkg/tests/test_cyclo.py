"""Exact arithmetic in Q(zeta_n)."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nahmvec.cyclo import CycloElement, cos_pi, cyclo_embed, cyclotomic_poly, euler_phi, exp_pi_i, sin_pi, sqrt_int

CONDUCTORS = [1, 3, 4, 5, 8, 9, 12, 18]


@st.composite
def elements(draw, n=None):
    if n is None:
        n = draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=euler_phi(n), max_size=euler_phi(n)))
    return CycloElement(n, coeffs)


def test_zeta_powers_wrap():
    for n in range(3, 49):
        z = cyclo_embed(1, n)
        assert z ** n == 1
        assert z ** (n + 1) == z


def test_phi_vanishes_at_zeta():
    for n in range(3, 49):
        z = cyclo_embed(1, n)
        total = CycloElement.from_rational(0, n)
        for e, c in enumerate(cyclotomic_poly(n)):
            total = total + z ** e * c
        assert total == 0
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)


def test_sqrt3_i_in_q9():
    z = cyclo_embed(1, 9)
    d = z ** 3 - z ** -3
    assert d * d == -3
    assert d == sqrt_int(3) * cyclo_embed(1, 4)


def test_zeta18_ninth_power():
    assert cyclo_embed(9, 18) == -1


def test_zeta6_inverse():
    z = cyclo_embed(1, 6)
    assert z * z.inverse() == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycloElement.from_rational(0, 9).inverse()


def test_cos_and_sin_match_floats():
    with mpmath.workprec(120):
        for a, b in [(1, 10), (3, 10), (9, 10), (2, 5), (7, 12), (5, 18)]:
            c = cos_pi(a, b).to_complex()
            s = sin_pi(a, b).to_complex()
            assert abs(c - mpmath.cos(mpmath.pi * a / b)) < mpmath.mpf(10) ** -30
            assert abs(s - mpmath.sin(mpmath.pi * a / b)) < mpmath.mpf(10) ** -30


def test_cos_identity_from_rr_display():
    assert cos_pi(9, 10) == -sin_pi(2, 5)
    assert cos_pi(3, 10) == sin_pi(1, 5)
    assert cos_pi(1, 10) == sin_pi(2, 5)


def test_sqrt_int_squares():
    for k in [2, 3, 5, 6, 7, 8, 12, 15, Fraction(5, 3), Fraction(1, 8)]:
        k = Fraction(k)
        r = sqrt_int(k)
        assert r * r == k
        with mpmath.workprec(80):
            assert abs(r.to_complex() - mpmath.sqrt(mpmath.mpf(k.numerator) / k.denominator)) < 1e-20


def test_exp_pi_i_is_root_of_unity():
    assert exp_pi_i(1, 2) == cyclo_embed(1, 4)
    assert exp_pi_i(1) == -1
    assert exp_pi_i(7, 30) ** 60 == 1


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_field_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(elements(n=12), elements(n=18))
def test_mixed_conductors_lift(a, b):
    s = a + b
    assert s.n == 36
    with mpmath.workprec(100):
        assert abs(s.to_complex() - (a.to_complex() + b.to_complex())) < mpmath.mpf(10) ** -25
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < mpmath.mpf(10) ** -25
