"""High-precision evaluation and numeric transformation checks."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from nahmvec.identities import product_recipe
from nahmvec.nahm import andrews_gordon_sum
from nahmvec.numeric import (
    FAIL_THRESHOLD,
    PASS_THRESHOLD,
    BigComplex,
    Evaluator,
    MobiusMap,
    eval_product,
    eval_series,
    g_quarter_residual,
    h_quarter_residual,
    theta_inversion_residuals,
    mobius_apply,
    parse_tau,
    relative_residual,
    sqrt_principal,
    theta_t_rule_exact,
    verify_classical,
    verify_gen_eta,
    verify_theta_lemmas,
    verify_transform,
)
from nahmvec.products import Eta, Product
from nahmvec.series import one
from nahmvec.transforms import alpha_matrix, get_transform_case

TIGHT = mpmath.mpf(10) ** -30


def test_bigcomplex_precision_is_min_of_operands():
    a = BigComplex.make(1, 2, 256)
    b = BigComplex.make(Fraction(1, 3), 0, 96)
    assert (a * b).prec == 96 and (a + 1).prec == 256


def test_parse_tau_forms():
    assert complex(parse_tau("i")) == 1j
    assert complex(parse_tau("2i")) == 2j
    t = parse_tau("-1/3+2/3*i")
    assert abs(complex(t) - complex(-1 / 3, 2 / 3)) < 1e-15
    for bad in ("1/2", "1/2-i", "x+i", ""):
        with pytest.raises(ValueError):
            parse_tau(bad)


def test_constant_series_is_one():
    ev = eval_series(one(), parse_tau("1/5+1/2*i"))
    assert ev.converged and complex(ev.value) == 1


def test_eta_at_i_closed_form():
    with mpmath.workprec(192):
        ev = eval_product(Product([Eta(Fraction(1))]), parse_tau("i"))
        oracle = mpmath.gamma(mpmath.mpf(1) / 4) / (2 * mpmath.pi ** (mpmath.mpf(3) / 4))
        assert ev.converged
        assert abs(abs(ev.value.value) - oracle) < TIGHT


def test_rr_series_matches_product_value():
    tau = parse_tau("2i")
    s = andrews_gordon_sum(2, 2, 80).shift(Fraction(-1, 60))
    p = Product([]) * product_recipe("RR", i=1)
    with mpmath.workprec(192):
        v_sum = eval_series(s, tau)
        v_prod = eval_product(p, tau).value.value * mpmath.exp(2j * mpmath.pi * (-mpmath.mpf(1) / 60) * tau.value)
        assert v_sum.converged
        assert abs(v_sum.value.value - v_prod) < mpmath.mpf(10) ** -35


def test_mobius_and_sqrt():
    S = MobiusMap(0, -1, 1, 0)
    with mpmath.workprec(128):
        assert abs(mobius_apply(S, parse_tau("i", 128)).value - 1j) < TIGHT
        assert sqrt_principal(mpmath.mpc(1)) == 1
        tau = mpmath.mpc(0.5, 0.5)
        assert mpmath.re(sqrt_principal(-2j * tau)) > 0
    with pytest.raises(ValueError):
        MobiusMap(1, 1, 1, 1)
    with pytest.raises(ZeroDivisionError):
        mobius_apply(MobiusMap(1, 0, 1, 1), mpmath.mpc(-1))


def test_relative_residual_flags_sign():
    res, flip = relative_residual([mpmath.mpc(2)], [mpmath.mpc(-2)])
    assert res > 1 and flip
    res, flip = relative_residual([mpmath.mpc(2)], [mpmath.mpc(2)])
    assert res == 0 and not flip


def test_classical_rules_random_points():
    rng = random.Random(11)
    for _ in range(5):
        tau = BigComplex.make(Fraction(rng.randint(-50, 50), 100), Fraction(rng.randint(60, 200), 100))
        report = verify_classical(tau)
        assert max(report.values()) < 1e-30, report


def test_gen_eta_inversion_at_i():
    r = verify_gen_eta(9, 1, 0, (0, -1, 1, 0), parse_tau("i"))
    assert r["residual"] < PASS_THRESHOLD and not r["flags"]


def test_gen_eta_translation_rule():
    r = verify_gen_eta(7, 2, 3, (1, 1, 0, 1), parse_tau("1/5+1/2*i"))
    assert r["residual"] < PASS_THRESHOLD


def test_lemma41_even_even():
    assert g_quarter_residual(2, 4, parse_tau("i")) < 1e-30


def test_lemma42_with_half_terms():
    assert h_quarter_residual(0, 3, parse_tau("i")) < 1e-30


def test_theta_t_rule_exact_on_series():
    pairs = [(j, Fraction(m2, 2)) for m2 in range(1, 11) for j in range(0, 5) if (j + Fraction(m2, 2)).denominator == 1]
    assert len(pairs) >= 20
    for j, m in pairs[:20]:
        assert theta_t_rule_exact(j, m)
    with pytest.raises(ValueError):
        theta_t_rule_exact(1, Fraction(1, 2))


def test_theta_inversion_residuals_small():
    out = theta_inversion_residuals(2, Fraction(5, 2), parse_tau("1/5+1/2*i"))
    assert set(out) >= {"h-S", "g-S"}
    assert max(out.values()) < PASS_THRESHOLD
    full = verify_theta_lemmas(1, 3, parse_tau("i"))
    assert max(full.values()) < PASS_THRESHOLD and len(full) == 6


def test_rr_case_at_i():
    rep = verify_transform("RR", ["i"], 192)
    assert rep.ok
    assert all(r.worst < 1e-30 for r in rep.rules)


def test_kr_in_the_tau_over_three_form():
    case = get_transform_case("KR")
    with mpmath.workprec(192 + 32):
        ev = Evaluator(192)
        tau = 1j / mpmath.sqrt(3)
        left = ev.vector(case.components, -1 / tau)
        right_in = ev.vector(case.components, tau / 3)
        M = alpha_matrix().numeric()
        right = [mpmath.fsum(M[i][j] * right_in[j] for j in range(3)) for i in range(3)]
        res, _ = relative_residual(left, right)
    assert res < PASS_THRESHOLD and not ev.flags


def test_x48_negative_control():
    rep = verify_transform("x48", None, 192)
    rules = {r.name: r for r in rep.rules}
    assert rules["gamma0(4)-candidate"].verdict == "EXPECTED-FAIL"
    assert rules["gamma0(4)-candidate"].best > FAIL_THRESHOLD
    assert rules["composite"].worst < PASS_THRESHOLD
    assert rep.ok


def test_precision_monotone():
    lo = verify_transform("Capparelli", ["1/5+1/2*i"], 192)
    hi = verify_transform("Capparelli", ["1/5+1/2*i"], 384)
    for a, b in zip(lo.rules, hi.rules):
        assert b.worst <= 4 * max(a.worst, 1e-300)
        assert b.worst < 1e-80


def test_low_precision_rejected():
    with pytest.raises(ValueError):
        verify_transform("RR", None, 32)


def test_report_serializes_without_timing():
    d = verify_transform("Capparelli", ["i"], 128).to_dict()
    assert "wall_time" not in d and d["ok"]
    assert d["certificate"].startswith("heuristic doubling")
