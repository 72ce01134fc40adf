"""Exact transformation matrices, Gamma0(N) composition and the mod 9 constants."""

from __future__ import annotations

import json
from fractions import Fraction

import mpmath
import pytest

from nahmvec.cyclo import as_cyclo, cos_pi, exp_pi_i, sin_pi, sqrt_int
from nahmvec.transforms import (
    AlgebraicMatrix,
    SingularMatrix,
    alpha,
    alpha_matrix,
    compose_gamma0,
    cyclo_constant_check,
    gen_eta_multiplier,
    get_transform_case,
    matrix_A,
    matrix_B,
    matrix_C,
    matrix_Lambda,
    matrix_Lambda_hat,
    matrix_Lambda_tilde,
    registry_transform_cases,
    transform_catalog_json,
)

half = as_cyclo(Fraction(1, 2))


def scaled_A(k):
    return matrix_A(k) * (sqrt_int(k).inverse() * 2)


def test_A5_matches_sine_form():
    s1, s2 = sin_pi(1, 5), sin_pi(2, 5)
    assert matrix_A(5) == AlgebraicMatrix([[s2, s1], [s1, -s2]])
    assert matrix_A(2) == AlgebraicMatrix([[cos_pi(1, 4)]])


def test_A_symmetric():
    for k in range(2, 13):
        A = matrix_A(k)
        assert A == A.transpose()
        assert A.shape == (k // 2, k // 2)


@pytest.mark.parametrize("k", [3, 5, 7, 9, 11])
def test_scaled_A_is_involution(k):
    P = scaled_A(k)
    n = k // 2
    assert P @ P == AlgebraicMatrix.identity(n)
    with mpmath.workprec(200):
        M = mpmath.matrix(P.numeric())
        err = mpmath.mnorm(M * M - mpmath.eye(n), 1)
        assert err < mpmath.mpf(10) ** -30


def test_lambda_family():
    assert matrix_Lambda(5) == AlgebraicMatrix.diag([exp_pi_i(1, 10), exp_pi_i(9, 10)])
    assert matrix_Lambda_tilde(3) == AlgebraicMatrix.diag([exp_pi_i(-1, 6), exp_pi_i(-9, 6)])
    assert matrix_Lambda_hat(7).shape == (3, 3)
    with pytest.raises(ValueError):
        matrix_Lambda_hat(6)
    for k in range(2, 10):
        for x in matrix_Lambda(k).diagonal() + matrix_Lambda_tilde(k).diagonal():
            assert x * x.conjugate() == 1


def test_B_and_C_half_entries():
    for k in range(2, 9):
        C = matrix_C(k)
        assert all(C[i, 0] == half for i in range(C.shape[0]))
    B3 = matrix_B(3)
    assert B3.shape == (2, 2)
    assert (B3[0, 1], B3[1, 1]) == (half, -half)
    with pytest.raises(ValueError):
        matrix_B(1)


def test_alpha_values():
    with mpmath.workprec(100):
        oracle = 1 / (2 * mpmath.sqrt(3) * mpmath.sin(mpmath.pi / 9))
        a1 = alpha(1).to_complex()
        assert abs(a1 - oracle) < mpmath.mpf(10) ** -25
        assert abs(a1.real - mpmath.mpf("0.844029")) < 1e-6
        a2, a4 = alpha(2).to_complex().real, alpha(4).to_complex().real
        assert a2 > a4 > 0
    with pytest.raises(ValueError):
        alpha(3)


def test_alpha_matrix_layout():
    a1, a2, a4 = alpha(1), alpha(2), alpha(4)
    M = alpha_matrix()
    assert [M[0, j] for j in range(3)] == [a1, a2, a4]
    assert [M[1, j] for j in range(3)] == [a2, -a4, -a1]
    assert [M[2, j] for j in range(3)] == [a4, -a1, a2]
    assert M @ M == AlgebraicMatrix.identity(3)


def test_compose_trivial_and_singular():
    I2 = AlgebraicMatrix.identity(2)
    assert compose_gamma0(I2, I2) == I2
    with pytest.raises(ValueError):
        compose_gamma0(I2, AlgebraicMatrix([[1, 1], [0, 1]]))
    with pytest.raises(SingularMatrix):
        compose_gamma0(I2, AlgebraicMatrix.diag([1, 0]))


def test_cyclo_constants_all_pass():
    rows = cyclo_constant_check()
    names = [r["identity"] for r in rows]
    assert len(rows) == 14
    assert all(r["pass"] for r in rows), [r for r in rows if not r["pass"]]
    assert "zeta_18^9 = -1" in names
    assert "a22 = -alpha_4" in names
    assert sum(n.startswith("a") and "=" in n and n[1].isdigit() for n in names) == 9


def test_gen_eta_multiplier_shift_rule():
    m, gh = gen_eta_multiplier(9, 1, 0, (1, 1, 0, 1))
    x = Fraction(1, 9)
    assert m == exp_pi_i(x * x - x + Fraction(1, 6)) and gh == (1, 1)
    with pytest.raises(ValueError):
        gen_eta_multiplier(9, 1, 0, (1, 1, 1, 1))


def test_registry_shape():
    cases = registry_transform_cases()
    assert len(cases) == 49
    for c in cases:
        T = c.t_matrix
        assert T.is_diagonal()
        assert all(x * x.conjugate() == 1 for x in T.diagonal())
        for r in c.rules:
            assert r.matrix.shape[0] == len(c.components)


def test_rr_and_capparelli_data():
    rr = get_transform_case("RR")
    assert rr.t_matrix == AlgebraicMatrix.diag([exp_pi_i(-1, 30), exp_pi_i(11, 30)])
    cap = get_transform_case("Capparelli").rule("S")
    assert cap.N == 3
    assert cap.matrix == AlgebraicMatrix([[1, 1], [1, -1]]) * sqrt_int(2).inverse()


def test_x48_negative_control_is_registered():
    rule = get_transform_case("x48").rule("gamma0(4)-candidate")
    assert rule.expect == "fail" and rule.N == 4


def test_ag_k2_reproduces_rr_matrix():
    ag = get_transform_case("AG-k2").rule("S").matrix
    rr = get_transform_case("RR").rule("S").matrix
    assert ag == rr
    with mpmath.workprec(200):
        for a, b in zip(ag.numeric(), rr.numeric()):
            for x, y in zip(a, b):
                assert abs(x - y) < mpmath.mpf(10) ** -30
        s1, s2 = mpmath.sin(mpmath.pi / 5), mpmath.sin(2 * mpmath.pi / 5)
        c = 2 / mpmath.sqrt(5)
        expected = [[c * s2, c * s1], [c * s1, -c * s2]]
        for a, b in zip(ag.numeric(), expected):
            for x, y in zip(a, b):
                assert abs(x - y) < mpmath.mpf(10) ** -30


def test_displayed_composites_equal_lemma_composition():
    compared = 0
    for c in registry_transform_cases():
        names = {r.name for r in c.rules}
        if not {"composite", "composite-lemma"} <= names:
            continue
        shown, composed = c.rule("composite"), c.rule("composite-lemma")
        if shown.right is not None:
            continue
        assert shown.matrix == composed.matrix, c.name
        assert shown.automorphy == composed.automorphy, c.name
        compared += 1
    assert compared >= 25


def test_printed_composites_differ_from_composition():
    for name in ("Bressoud-X0-k3", "HJWZ-k2", "AG-ge-k2"):
        c = get_transform_case(name)
        assert c.rule("composite-as-printed").matrix != c.rule("composite-lemma").matrix


def test_catalog_json():
    doc = json.loads(transform_catalog_json())
    assert doc["schema"] == 1
    assert {t["name"] for t in doc["transforms"]} >= {"RR", "KR", "Capparelli", "x48"}
