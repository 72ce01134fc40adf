"""Nahm sums: exact enumeration, named families and the JSON quadruple format."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nahmvec.nahm import (
    NahmQuadruple,
    NotPositiveDefinite,
    QuadrupleParseError,
    andrews_gordon_sum,
    box_bound,
    bressoud_eq38_sum,
    bressoud_sum,
    capparelli_sum,
    certify_positive_definite,
    enumerate_points,
    example_sum,
    exponent_of,
    hjwz_sum,
    kanade_russell_sum,
    lambda_min_lower_bound,
    nahm_sum,
    quadruple_from_json,
)
from nahmvec.series import INF, compare_to_order, invert, mul, one, pochhammer


def prod(*factors, T):
    """prod of (u q^a; q^m)_inf^{e} for (a, m, u, e) tuples."""
    out = one()
    for a, m, u, e in factors:
        p = pochhammer(a, u, m, INF, T)
        out = mul(out, p if e > 0 else invert(p))
    return out


def coeffs(s, T):
    return [s.coeff(n) for n in range(T)]


def same(a, b, T):
    return compare_to_order(a, b, T) is None


def naive_sum(Q, B, T, box):
    """Brute-force sum over the box with partition counts; exponents on a 1/4 lattice."""
    den = 4
    N = T * den
    # parts(n)[k] = number of partitions of k/den... with parts <= n, parts scaled by den
    table = [[1] + [0] * (N - 1)]
    for n in range(1, box + 1):
        row = list(table[-1])
        step = n * den
        for k in range(step, N):
            row[k] += row[k - step]
        table.append(row)
    out: dict[int, int] = {}
    for n in itertools.product(range(box + 1), repeat=len(Q)):
        e = exponent_of(Q, B, 0, n) * den
        assert e.denominator == 1
        e = int(e)
        if e >= N:
            continue
        # 1/prod (q;q)_{n_i}: convolve partition counts
        series = [1] + [0] * (N - e - 1)
        for ni in n:
            row = table[ni]
            series = [sum(series[a] * row[k - a] for a in range(k + 1)) for k in range(N - e)]
        for k, c in enumerate(series):
            if c:
                out[k + e] = out.get(k + e, 0) + c
    return {Fraction(k, den): c for k, c in out.items() if c}


# named examples -----------------------------------------------------------

def test_rank_one_rogers_ramanujan():
    s = nahm_sum(NahmQuadruple(((2,),), (0,), 0), 7)
    assert coeffs(s, 7) == [1, 1, 1, 1, 2, 2, 3]


def test_constant_prefactor():
    s = nahm_sum(NahmQuadruple(((2,),), (1,), Fraction(11, 60)), 5)
    assert s.order() == Fraction(11, 60)


def test_generalized_rank_two_kr():
    quad = NahmQuadruple.from_form([[2, 3], [3, 6]], [0, 0], 0, [1, 3])
    assert quad.D == (1, 3)
    T = 30
    oracle = prod((1, 9, 1, -1), (3, 9, 1, -1), (6, 9, 1, -1), (8, 9, 1, -1), T=T)
    assert same(nahm_sum(quad, T), oracle, T)


def test_andrews_gordon_small():
    T = 30
    G = prod((1, 5, 1, -1), (4, 5, 1, -1), T=T)
    H = prod((2, 5, 1, -1), (3, 5, 1, -1), T=T)
    assert same(andrews_gordon_sum(2, 2, T), G, T)
    h = andrews_gordon_sum(2, 1, T)
    assert same(h, H, T)
    assert (h.coeff(0), h.coeff(1)) == (1, 0)
    for k in (2, 3, 5):
        assert coeffs(andrews_gordon_sum(k, 1, 1), 1) == [1]


def test_andrews_gordon_against_products():
    T = 60
    for k in (2, 3, 4):
        for i in range(1, k + 1):
            m = 2 * k + 1
            oracle = one()
            for r in range(1, m):
                if r % m not in (i, m - i, 0):
                    oracle = mul(oracle, invert(pochhammer(r, 1, m, INF, T)))
            assert same(andrews_gordon_sum(k, i, T), oracle, T), (k, i)


def test_bressoud_small():
    T = 20
    oracle = mul(prod((2, 4, 1, 1), (2, 4, 1, 1), (4, 4, 1, 1), T=T), invert(pochhammer(1, 1, 1, INF, T)))
    assert same(bressoud_sum(2, 2, T), oracle, T)
    T = 30
    oracle = mul(prod((1, 6, 1, 1), (5, 6, 1, 1), (6, 6, 1, 1), T=T), invert(pochhammer(1, 1, 1, INF, T)))
    assert same(bressoud_sum(3, 1, T), oracle, T)
    assert coeffs(bressoud_sum(4, 2, 1), 1) == [1]


def test_capparelli():
    T = 40
    a1 = prod((2, 6, -1, 1), (3, 6, -1, 1), (4, 6, -1, 1), (6, 6, -1, 1), T=T)
    a2 = prod((1, 6, -1, 1), (3, 6, -1, 1), (5, 6, -1, 1), (6, 6, -1, 1), T=T)
    assert same(capparelli_sum(1, T), a1, T)
    assert same(capparelli_sum(2, T), a2, T)
    assert coeffs(capparelli_sum(2, 2), 2) == [1, 1]


def test_kanade_russell():
    T = 60
    b1 = prod((1, 9, 1, -1), (3, 9, 1, -1), (6, 9, 1, -1), (8, 9, 1, -1), T=T)
    b2 = prod((2, 9, 1, -1), (3, 9, 1, -1), (6, 9, 1, -1), (7, 9, 1, -1), T=T)
    assert same(kanade_russell_sum(1, T), b1, T)
    assert same(kanade_russell_sum(2, T), b2, T)
    b3 = kanade_russell_sum(3, 5)
    assert b3.order() == 0 and b3.coeff(0) == 1


def test_bressoud_eq38_and_hjwz():
    T = 20
    qq = invert(pochhammer(1, 1, 1, INF, T))
    b = mul(prod((2, 4, 1, 1), (1, 8, 1, 1), (7, 8, 1, 1), (8, 8, 1, 1), T=T), qq)
    assert same(bressoud_eq38_sum(2, 1, T), b, T)
    h = mul(prod((1, 1, -1, 1), (3, 6, 1, 1), (3, 6, 1, 1), (6, 6, 1, 1), T=T), qq)
    assert same(hjwz_sum(2, 2, T), h, T)
    for k in (2, 3):
        for i in range(1, k + 1):
            assert coeffs(bressoud_eq38_sum(k, i, 1), 1) == [1]
            assert coeffs(hjwz_sum(k, i, 1), 1) == [1]


def test_four_sum_examples():
    T = 30
    x1 = prod((3, 3, 1, 1), (3, 3, 1, 1), (4, 4, 1, 1), (1, 1, 1, -1), (2, 2, 1, -1), (6, 6, 1, -1), T=T)
    assert same(example_sum("x1-222", T), x1, T)
    assert example_sum("x2-222", 1).coeff(0) == 1


def test_family_ranges():
    with pytest.raises(ValueError):
        andrews_gordon_sum(1, 1, 5)
    with pytest.raises(ValueError):
        bressoud_sum(3, 4, 5)
    with pytest.raises(ValueError):
        kanade_russell_sum(4, 5)
    with pytest.raises(KeyError):
        example_sum("no-such-display", 5)


# quadruple validation -----------------------------------------------------

def test_not_positive_definite():
    with pytest.raises(NotPositiveDefinite) as info:
        NahmQuadruple(((1, 2), (2, 1)), (0, 0))
    assert info.value.index == 1 and info.value.pivot == -3


def test_asymmetric_form_rejected():
    with pytest.raises(ValueError):
        NahmQuadruple(((2, 1), (0, 2)), (0, 0))


def test_json_roundtrip():
    q = quadruple_from_json('{"A": [["4/3", "2/3"], ["2/3", "4/3"]], "B": ["0", "1/3"], "C": "-1/12", "D": [1, 1]}')
    assert q.A[0][0] == Fraction(4, 3) and q.C == Fraction(-1, 12)


@pytest.mark.parametrize("text,line,col", [
    ('{"A": [[2]], "B": [0,]}', 1, 22),
    ('{\n  "A": [[2]]\n  "B": [0]\n}', 3, 3),
])
def test_json_syntax_errors_have_positions(text, line, col):
    with pytest.raises(QuadrupleParseError) as info:
        quadruple_from_json(text)
    assert (info.value.line, info.value.col) == (line, col)


@pytest.mark.parametrize("text", [
    '[1, 2]',
    '{"A": [[2]]}',
    '{"A": [[0.5]], "B": [0]}',
    '{"A": [["x"]], "B": [0]}',
    '{"A": [[2]], "B": [0], "D": [1.5]}',
])
def test_json_content_errors(text):
    with pytest.raises(QuadrupleParseError):
        quadruple_from_json(text)


# properties ---------------------------------------------------------------

@st.composite
def definite_forms(draw):
    r = draw(st.integers(1, 3))
    L = [[draw(st.integers(1, 2)) if i == j else (draw(st.integers(-1, 1)) if j < i else 0)
          for j in range(r)] for i in range(r)]
    Q = [[sum(L[i][t] * L[j][t] for t in range(r)) + (1 if i == j else 0) for j in range(r)] for i in range(r)]
    B = [Fraction(draw(st.integers(-4, 4)), 2) for _ in range(r)]
    C = Fraction(draw(st.integers(-2, 2)), 3)
    return Q, B, C


@settings(max_examples=20, deadline=None)
@given(definite_forms())
def test_enumeration_exhaustive_under_bound_doubling(form):
    Q, B, C = form
    T = 8
    found = {n for n, _ in enumerate_points(Q, B, C, T)}
    R = box_bound(Q, B, C, T)
    for box in (R, 2 * R):
        brute = {n for n in itertools.product(range(box + 1), repeat=len(Q)) if exponent_of(Q, B, C, n) < T}
        assert brute == found


@settings(max_examples=20, deadline=None)
@given(definite_forms())
def test_enumeration_respects_quadratic_lower_bound(form):
    Q, B, C = form
    lam = lambda_min_lower_bound(Q)
    assert lam > 0
    certify_positive_definite([[Fraction(Q[i][j]) - (lam if i == j else 0) for j in range(len(Q))]
                               for i in range(len(Q))])
    normB = math.sqrt(sum(float(b) ** 2 for b in B))
    for n, e in enumerate_points(Q, B, C, 10):
        norm = math.sqrt(sum(v * v for v in n))
        assert float(e) >= float(lam) * norm * norm / 2 - normB * norm + float(C) - 1e-9


ENTRIES = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]


def small_quadruples():
    for a in ENTRIES:
        for b in ENTRIES:
            yield [[a]], [b]
    for a, b, c in itertools.product(ENTRIES, repeat=3):
        for B in itertools.product(ENTRIES, repeat=2):
            yield [[a, b], [b, c]], list(B)


def test_brute_force_oracle_rank_at_most_two():
    T = 12
    checked = 0
    for Q, B in small_quadruples():
        try:
            quad = NahmQuadruple(Q, B)
        except NotPositiveDefinite:
            continue
        got = dict(nahm_sum(quad, T).items())
        assert got == naive_sum(Q, B, T, box_bound(Q, B, 0, T)), (Q, B)
        checked += 1
    assert checked == 464
