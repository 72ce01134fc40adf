"""Nahm sums and the named sum families built on them.

A generalized Nahm sum is

    sum_{n >= 0} q^{n^T AD n / 2 + n^T B + C} / prod_i (q^{d_i}; q^{d_i})_{n_i}

with AD symmetric positive definite.  Lattice points below the truncation
order are enumerated with a Fincke-Pohst style recursion on the exact
LDL^T factorization of AD, so the enumeration is exhaustive by
construction; floating point is only used to propose candidate ranges,
every accept/reject decision is made in exact rational arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, Sequence

from .series import PuiseuxSeries

__all__ = [
    "NahmQuadruple",
    "NotPositiveDefinite",
    "EnumerationOverflow",
    "QuadrupleParseError",
    "ldl",
    "certify_positive_definite",
    "lambda_min_lower_bound",
    "box_bound",
    "enumerate_points",
    "enumerate_points_copositive",
    "quadratic_sum",
    "nahm_sum",
    "andrews_gordon_sum",
    "bressoud_sum",
    "capparelli_sum",
    "kanade_russell_sum",
    "bressoud_eq38_sum",
    "hjwz_sum",
    "example_sum",
    "EXAMPLE_IDS",
    "quadruple_from_json",
]

Matrix = Sequence[Sequence[Fraction]]

MAX_POINTS = 2_000_000


class NotPositiveDefinite(ValueError):
    def __init__(self, index: int, pivot: Fraction):
        super().__init__(f"AD is not positive definite: pivot {index} is {pivot}")
        self.index = index
        self.pivot = pivot


class EnumerationOverflow(RuntimeError):
    pass


class QuadrupleParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {msg}" if line else msg)
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# exact linear algebra


def ldl(Q: Matrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact LDL^T of a symmetric matrix; returns (L, pivots).

    Stops at the first nonpositive pivot, returning the pivots found so far
    (the last one being the offending value).
    """
    r = len(Q)
    L = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    piv: list[Fraction] = []
    for j in range(r):
        d = Fraction(Q[j][j]) - sum(L[j][k] ** 2 * piv[k] for k in range(j))
        piv.append(d)
        if d <= 0:
            return L, piv
        for i in range(j + 1, r):
            s = Fraction(Q[i][j]) - sum(L[i][k] * L[j][k] * piv[k] for k in range(j))
            L[i][j] = s / d
    return L, piv


def certify_positive_definite(Q: Matrix) -> list[Fraction]:
    L, piv = ldl(Q)
    if len(piv) < len(Q) or piv[-1] <= 0:
        raise NotPositiveDefinite(len(piv) - 1, piv[-1])
    return piv


def _is_pd(Q: Matrix) -> bool:
    L, piv = ldl(Q)
    return len(piv) == len(Q) and piv[-1] > 0


def lambda_min_lower_bound(Q: Matrix, iters: int = 30) -> Fraction:
    """Rational lambda > 0 with Q - lambda I positive definite (bisection)."""
    certify_positive_definite(Q)
    r = len(Q)
    lo, hi = Fraction(0), min(Fraction(Q[i][i]) for i in range(r))
    for _ in range(iters):
        mid = ((lo + hi) / 2).limit_denominator(1 << 20)
        if mid <= lo or mid >= hi:
            break
        shifted = [[Fraction(Q[i][j]) - (mid if i == j else 0) for j in range(r)] for i in range(r)]
        if _is_pd(shifted):
            lo = mid
        else:
            hi = mid
    if lo == 0:
        # fall back to a tiny certified value
        eps = hi / 2
        while True:
            shifted = [[Fraction(Q[i][j]) - (eps if i == j else 0) for j in range(r)] for i in range(r)]
            if _is_pd(shifted):
                return eps
            eps /= 2
    return lo


def _norm_upper(B: Sequence[Fraction]) -> float:
    return math.sqrt(float(sum(Fraction(b) ** 2 for b in B))) * (1 + 1e-12) + 1e-12


def box_bound(Q: Matrix, B: Sequence[Fraction], C: Fraction, T, lam: Fraction | None = None) -> int:
    """Integer R with |n| <= R for every n >= 0 whose exponent is below T.

    From exponent(n) >= lam |n|^2 / 2 - |B| |n| + C.
    """
    lam = lam if lam is not None else lambda_min_lower_bound(Q)
    b = _norm_upper(B)
    disc = b * b + 2 * float(lam) * max(float(Fraction(T) - Fraction(C)), 0.0)
    return math.ceil((b + math.sqrt(disc)) / float(lam)) + 1


def _solve(Q: Matrix, B: Sequence[Fraction]) -> list[Fraction]:
    """Q x = B by exact Gaussian elimination."""
    r = len(Q)
    M = [[Fraction(Q[i][j]) for j in range(r)] + [Fraction(B[i])] for i in range(r)]
    for c in range(r):
        p = next(i for i in range(c, r) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(r):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [M[i][r] for i in range(r)]


def exponent_of(Q: Matrix, B: Sequence[Fraction], C: Fraction, n: Sequence[int]) -> Fraction:
    r = len(n)
    quad = sum(Fraction(Q[i][j]) * n[i] * n[j] for i in range(r) for j in range(r))
    return quad / 2 + sum(Fraction(B[i]) * n[i] for i in range(r)) + Fraction(C)


def enumerate_points(Q: Matrix, B: Sequence[Fraction], C: Fraction, T,
                     max_points: int = MAX_POINTS) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """All n in Z_{>=0}^r with exponent(n) < T, with their exponents."""
    r = len(Q)
    Q = [[Fraction(x) for x in row] for row in Q]
    B = [Fraction(b) for b in B]
    C = Fraction(C)
    T = Fraction(T)
    L, piv = ldl(Q)
    if len(piv) < r or piv[-1] <= 0:
        raise NotPositiveDefinite(len(piv) - 1, piv[-1])
    center = [-x for x in _solve(Q, B)]
    c_min = C + sum(B[i] * center[i] for i in range(r)) / 2
    budget0 = 2 * (T - c_min)
    if budget0 <= 0:
        return
    n = [0] * r
    y = [Fraction(0)] * r
    count = 0

    def rec(i: int, budget: Fraction):
        nonlocal count
        shift = sum((L[j][i] * y[j] for j in range(i + 1, r)), Fraction(0))
        c = center[i] - shift
        rad = math.sqrt(max(float(budget / piv[i]), 0.0))
        cf = float(c)
        lo = max(0, math.floor(cf - rad) - 1)
        hi = math.ceil(cf + rad) + 1
        for v in range(lo, hi + 1):
            t = v - c
            used = piv[i] * t * t
            if used > budget:
                continue
            n[i] = v
            y[i] = v - center[i]
            if i == 0:
                e = exponent_of(Q, B, C, n)
                if e < T:
                    count += 1
                    if count > max_points:
                        raise EnumerationOverflow(f"more than {max_points} lattice points below order {T}")
                    yield tuple(n), e
            else:
                yield from rec(i - 1, budget - used)
        n[i] = 0
        y[i] = Fraction(0)

    yield from rec(r - 1, budget0)


def enumerate_points_copositive(Q: Matrix, B: Sequence[Fraction], C: Fraction, T,
                                max_points: int = MAX_POINTS) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """Lattice points below T for a form with positive diagonal and nonnegative off-diagonal.

    Such a form need not be definite, but on the nonnegative orthant every
    cross term is >= 0, so the exponent is bounded below by the sum of the
    one-variable parts; that bound drives the pruning.
    """
    r = len(Q)
    Q = [[Fraction(x) for x in row] for row in Q]
    B = [Fraction(b) for b in B]
    C, T = Fraction(C), Fraction(T)
    if any(Q[i][i] <= 0 for i in range(r)) or any(Q[i][j] < 0 for i in range(r) for j in range(r) if i != j):
        raise ValueError("form is not sign-copositive")
    floor_j = [min(Fraction(0), -B[j] * B[j] / (2 * Q[j][j])) if B[j] < 0 else Fraction(0) for j in range(r)]
    rest = [sum(floor_j[j + 1:], Fraction(0)) for j in range(r)]
    n = [0] * r
    count = 0

    def rec(i: int, partial: Fraction):
        nonlocal count
        cross = sum((Q[a][i] * n[a] for a in range(i)), Fraction(0))
        v = 0
        while True:
            val = partial + Q[i][i] * v * v / 2 + (B[i] + cross) * v
            vertex = -(B[i] + cross) / Q[i][i]
            if val + rest[i] >= T:
                if v >= vertex:
                    break
                v += 1
                continue
            n[i] = v
            if i == r - 1:
                count += 1
                if count > max_points:
                    raise EnumerationOverflow(f"more than {max_points} lattice points below order {T}")
                yield tuple(n), val
            else:
                yield from rec(i + 1, val)
            v += 1
        n[i] = 0

    yield from rec(0, C)


# ---------------------------------------------------------------------------
# dense accumulation


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class _Accumulator:
    """Dense integer coefficients of exponents base + s/den for 0 <= s < L."""

    def __init__(self, T, den: int, base: Fraction = Fraction(0)):
        self.T = Fraction(T)
        self.den = den
        self.base = Fraction(base)
        self.L = max(0, math.ceil((self.T - self.base) * den))
        self.acc = [0] * self.L

    def slot(self, e: Fraction) -> int:
        s = (Fraction(e) - self.base) * self.den
        if s.denominator != 1:
            raise ValueError(f"exponent {e} is off the lattice 1/{self.den}")
        return s.numerator

    def add(self, e: Fraction, denoms: Sequence[tuple[int, int]], poly: dict[int, int] | None = None,
            coeff: int = 1):
        """Add coeff * q^e * poly(q) / prod (q^d; q^d)_count.

        ``poly`` maps integer-scaled offsets (in units 1/den) to coefficients.
        """
        s0 = self.slot(e)
        L = self.L
        if s0 >= L:
            return
        width = L - s0
        v = [0] * width
        if poly is None:
            v[0] = coeff
        else:
            for off, c in poly.items():
                if off < 0 and s0 + off < 0:
                    raise AssertionError("term with exponent below the accumulator base")
                if off < width:
                    v[off] += coeff * c
        for d, cnt in denoms:
            for k in range(1, cnt + 1):
                st = d * k * self.den
                if st >= width:
                    break
                for r0 in range(st):
                    v[r0::st] = accumulate(v[r0::st])
        acc = self.acc
        for x in range(width):
            if v[x]:
                acc[s0 + x] += v[x]

    def series(self, scale: Fraction = Fraction(1)) -> PuiseuxSeries:
        den = self.den * self.base.denominator
        off = self.base.numerator * self.den
        terms = {}
        for s, c in enumerate(self.acc):
            if c:
                k = s * self.base.denominator + off
                terms[k] = c * scale if scale != 1 else c
        return PuiseuxSeries(terms, den, self.T, 1)


def _exponent_den(Q: Matrix, B: Sequence[Fraction], extra: Sequence[Fraction] = ()) -> int:
    den = 1
    r = len(Q)
    for i in range(r):
        den = _lcm(den, (Fraction(Q[i][i]) / 2).denominator)
        for j in range(i + 1, r):
            den = _lcm(den, Fraction(Q[i][j]).denominator)
        den = _lcm(den, Fraction(B[i]).denominator)
    for x in extra:
        den = _lcm(den, Fraction(x).denominator)
    return den


def quadratic_sum(Q: Matrix, B: Sequence[Fraction], C, d: Sequence[int], T,
                  numerator=None, scale: Fraction = Fraction(1), points=None) -> PuiseuxSeries:
    """sum_n q^{n^T Q n/2 + B n + C} num(n) / prod (q^{d_i}; q^{d_i})_{n_i}.

    ``numerator(n)`` may return a dict {exponent offset (Fraction): coeff}
    multiplying the term; offsets must be nonnegative.  ``points`` overrides
    the lattice enumeration (an iterable of (n, exponent)).
    """
    C = Fraction(C)
    T = Fraction(T)
    den = _exponent_den(Q, B)
    if points is None:
        points = enumerate_points(Q, B, C, T)
    acc = _Accumulator(T, den, C)
    for n, e in points:
        denoms = [(d[i], n[i]) for i in range(len(n)) if n[i]]
        if numerator is None:
            acc.add(e, denoms)
        else:
            num = numerator(n)
            poly = {}
            for off, c in num.items():
                s = Fraction(off) * den
                if s.denominator != 1 or s < 0:
                    raise ValueError("numerator offsets must be nonnegative and on the lattice")
                poly[s.numerator] = poly.get(s.numerator, 0) + c
            acc.add(e, denoms, poly)
    return acc.series(scale)


# ---------------------------------------------------------------------------
# quadruples


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class NahmQuadruple:
    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[Fraction, ...]
    C: Fraction = Fraction(0)
    D: tuple[int, ...] | None = None

    def __post_init__(self):
        A = tuple(tuple(_frac(x) for x in row) for row in self.A)
        r = len(A)
        if r == 0 or any(len(row) != r for row in A):
            raise ValueError("A must be a nonempty square matrix")
        B = tuple(_frac(b) for b in self.B)
        if len(B) != r:
            raise ValueError("B has the wrong length")
        D = tuple(int(x) for x in self.D) if self.D is not None else (1,) * r
        if len(D) != r or any(x <= 0 for x in D):
            raise ValueError("D must be r positive integers")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", _frac(self.C))
        object.__setattr__(self, "D", D)
        Q = self.form
        for i in range(r):
            for j in range(i + 1, r):
                if Q[i][j] != Q[j][i]:
                    raise ValueError("AD is not symmetric")
        certify_positive_definite(Q)

    @property
    def rank(self) -> int:
        return len(self.A)

    @property
    def form(self) -> tuple[tuple[Fraction, ...], ...]:
        """The quadratic-form matrix AD."""
        return tuple(tuple(self.A[i][j] * self.D[j] for j in range(self.rank)) for i in range(self.rank))

    @classmethod
    def from_form(cls, Q, B, C=0, D=None) -> "NahmQuadruple":
        r = len(Q)
        D = tuple(D) if D is not None else (1,) * r
        A = tuple(tuple(Fraction(Q[i][j]) / D[j] for j in range(r)) for i in range(r))
        return cls(A, tuple(B), C, D)


def nahm_sum(quad: NahmQuadruple, T) -> PuiseuxSeries:
    return quadratic_sum(quad.form, quad.B, quad.C, quad.D, T)


def _parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise QuadrupleParseError(f"{where}: expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise QuadrupleParseError(f"{where}: cannot read {x!r} as p/q") from None
    raise QuadrupleParseError(f"{where}: rationals must be strings like \"p/q\" or integers, got {x!r}")


def quadruple_from_json(text: str) -> NahmQuadruple:
    """Parse {"A": [[...]], "B": [...], "C": "p/q", "D": [...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuadrupleParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise QuadrupleParseError("top level must be an object", 1, 1)
    for key in ("A", "B"):
        if key not in doc:
            raise QuadrupleParseError(f"missing key {key!r}")
    A_raw = doc["A"]
    if not isinstance(A_raw, list) or not all(isinstance(r, list) for r in A_raw):
        raise QuadrupleParseError("A must be a list of rows")
    A = [[_parse_rational(x, f"A[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(A_raw)]
    if not isinstance(doc["B"], list):
        raise QuadrupleParseError("B must be a list")
    B = [_parse_rational(x, f"B[{i}]") for i, x in enumerate(doc["B"])]
    C = _parse_rational(doc.get("C", "0"), "C")
    D = doc.get("D")
    if D is not None:
        if not isinstance(D, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in D):
            raise QuadrupleParseError("D must be a list of positive integers")
    return NahmQuadruple(tuple(map(tuple, A)), tuple(B), C, tuple(D) if D else None)


# ---------------------------------------------------------------------------
# families


def _min_form(r: int, factor: int) -> list[list[int]]:
    """factor * min(a, b): the form of factor * (N_1^2 + ... + N_r^2)."""
    return [[factor * (min(a, b) + 1) for b in range(r)] for a in range(r)]


def _check_ki(k: int, i: int, kmin: int, imax: int):
    if k < kmin or not 1 <= i <= imax:
        raise ValueError(f"parameters out of range: k={k}, i={i}")


def andrews_gordon_sum(k: int, i: int, T) -> PuiseuxSeries:
    """x_{2k+1,i}: sum of q^{N_1^2+...+N_{k-1}^2+N_i+...+N_{k-1}} / prod (q;q)_{n_j}."""
    _check_ki(k, i, 2, k)
    r = k - 1
    Q = _min_form(r, 2)
    B = [max(0, l - i + 2) for l in range(r)]
    return quadratic_sum(Q, B, 0, [1] * r, T)


def bressoud_sum(k: int, i: int, T) -> PuiseuxSeries:
    """x_{2k,i}: as Andrews-Gordon with last denominator (q^2;q^2)_{n_{k-1}}."""
    _check_ki(k, i, 2, k)
    r = k - 1
    Q = _min_form(r, 2)
    B = [max(0, l - i + 2) for l in range(r)]
    d = [1] * (r - 1) + [2]
    return quadratic_sum(Q, B, 0, d, T)


_CAPPARELLI_Q = [[4, 6], [6, 12]]


def capparelli_sum(which: int, T) -> PuiseuxSeries:
    if which == 1:
        return quadratic_sum(_CAPPARELLI_Q, [0, 0], 0, [1, 3], T)
    if which == 2:
        def extra(n):
            return {Fraction(0): 1, Fraction(2 * n[0] + 3 * n[1] + 1): 1}
        return quadratic_sum(_CAPPARELLI_Q, [1, 3], 0, [1, 3], T, numerator=extra)
    raise ValueError("which must be 1 or 2")


_KR_Q = [[2, 3], [3, 6]]
_KR_B = {1: [0, 0], 2: [1, 3], 3: [2, 3]}


def kanade_russell_sum(which: int, T) -> PuiseuxSeries:
    if which not in _KR_B:
        raise ValueError("which must be 1, 2 or 3")
    return quadratic_sum(_KR_Q, _KR_B[which], 0, [1, 3], T)


def _neg_poch_poly(first: int, count: int, limit) -> tuple[int, dict[int, int]]:
    """prod_{t<count} (1 + q^{first + 2t}) for negative exponents, as q^low * P(q).

    Returns (low, P) where P keeps only offsets below ``limit``.
    """
    exps = [first + 2 * t for t in range(count)]
    low = sum(exps)
    poly = {0: 1}
    for a in exps:
        step = -a
        nxt = dict(poly)
        for e, c in poly.items():
            if e + step < limit:
                nxt[e + step] = nxt.get(e + step, 0) + c
        poly = nxt
    return low, poly


def _nested(k: int, bound_fn, n1_max: int):
    """n_1 >= n_2 >= ... >= n_{k-1} >= 0 with a pruning lower bound."""
    r = k - 1
    out = []

    def rec(prefix):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        top = prefix[-1] if prefix else n1_max
        for v in range(top + 1):
            cand = prefix + [v]
            if not bound_fn(cand):
                break
            rec(cand)

    rec([])
    return out


def bressoud_eq38_sum(k: int, i: int, T) -> PuiseuxSeries:
    """Bressoud's sum with (-q^{1-2n_1}; q^2)_{n_1} and nested summation."""
    _check_ki(k, i, 2, k)
    T = Fraction(T)
    r = k - 1

    def lower(prefix):
        # exponent >= 2 sum n_j^2 - n_1^2 >= n_1^2 + 2 sum_{j>1} n_j^2
        s = prefix[0] ** 2 + 2 * sum(v * v for v in prefix[1:])
        return s < T

    n1_max = math.isqrt(int(T)) + 1
    acc = _Accumulator(T, 1)
    for n in _nested(k, lower, n1_max):
        n1 = n[0]
        lin = sum(n[j] for j in range(i - 1, r))
        e = 2 * (sum(v * v for v in n) + lin)
        base = e - n1 * n1
        if base < 0:
            raise AssertionError(f"negative total exponent {base} at n={n}")
        low, poly = _neg_poch_poly(1 - 2 * n1, n1, T - base)
        assert low == -n1 * n1
        denoms = [(2, n[j] - n[j + 1]) for j in range(r - 1)] + [(2, n[r - 1])]
        acc.add(Fraction(base), [dd for dd in denoms if dd[1]], poly)
    return acc.series()


def hjwz_sum(k: int, i: int, T) -> PuiseuxSeries:
    """Overpartition analogue of Bressoud's sum (nested summation).

    For n_1 = 0 the factor (-q^{2-2n_1}; q^2)_{-1} equals 1/2; for i = k the
    factor (1 + q^{2 n_k}) is read with n_k = 0.
    """
    _check_ki(k, i, 2, k)
    T = Fraction(T)
    r = k - 1

    def lower(prefix):
        # exponent >= n_1 + 2 sum_{j>1} n_j^2
        s = prefix[0] + 2 * sum(v * v for v in prefix[1:])
        return s < T

    n1_max = int(T) + 1
    acc = _Accumulator(T, 1)
    for n in _nested(k, lower, n1_max):
        n1 = n[0]
        lin = sum(n[j] for j in range(i, r))
        e = 2 * (sum(v * v for v in n) + lin)
        n_i = n[i - 1] if i <= r else 0
        extra = {0: 1}
        extra[2 * n_i] = extra.get(2 * n_i, 0) + 1
        denoms = [(2, n[j] - n[j + 1]) for j in range(r - 1)] + [(2, n[r - 1])]
        denoms = [dd for dd in denoms if dd[1]]
        if n1 == 0:
            # (-q^2; q^2)_{-1} = 1/2
            if any(c % 2 for c in extra.values()):
                raise AssertionError("odd coefficient in the n_1 = 0 term")
            acc.add(Fraction(e), denoms, {o: c // 2 for o, c in extra.items()})
            continue
        base = e - n1 * (n1 - 1) - n1 * n1
        if base < 0:
            raise AssertionError(f"negative total exponent {base} at n={n}")
        lim = T - base
        low1, p1 = _neg_poch_poly(2 - 2 * n1, n1 - 1, lim)
        low2, p2 = _neg_poch_poly(1 - 2 * n1, n1, lim)
        assert low1 + low2 == base - e
        poly: dict[int, int] = {}
        for a, ca in p1.items():
            for b, cb in p2.items():
                if a + b >= lim:
                    continue
                for c, cc in extra.items():
                    if a + b + c < lim:
                        poly[a + b + c] = poly.get(a + b + c, 0) + ca * cb * cc
        acc.add(Fraction(base), denoms, poly)
    return acc.series()


# application sums -------------------------------------------------------------


def _ag_q2_form(k: int, i: int):
    Q = _min_form(k, 2)
    marks = set(range(i, k + 1, 2))
    B = [2 * sum(1 for j in marks if j <= l + 1) for l in range(k)]
    d = [2] * (k - 1) + [4]
    return Q, B, d


def _eta_hat_form(k: int, i: int):
    r = k + 2
    Q = [[0] * r for _ in range(r)]
    Q[0][0], Q[0][1], Q[1][0], Q[1][1] = 1, 1, 1, 2
    Q[1][2] = Q[2][1] = 2
    for a in range(k):
        for b in range(k):
            Q[2 + a][2 + b] = 8 * (min(a, b) + 1)
    B = [Fraction(1, 2), 1] + [4 * max(0, l - i + 2) for l in range(k)]
    d = [1, 1, 2] + [4] * (k - 1)
    return Q, B, d


_FIXED = {
    # id: (Q, B, C, d)
    "x1-111-mod5": ([[6, 4, 2], [4, 4, 2], [2, 2, 2]], [0, 0, 0], [2, 2, 2]),
    "x2-111-mod5": ([[6, 4, 2], [4, 4, 2], [2, 2, 2]], [2, 2, 0], [2, 2, 2]),
    "x3-111-mod5": ([[6, 4, 2], [4, 4, 2], [2, 2, 2]], [1, 0, 1], [2, 2, 2]),
    "x4-111-mod5": ([[6, 4, 2], [4, 4, 2], [2, 2, 2]], [3, 2, 1], [2, 2, 2]),
    "x1-mod20": ([[1, 2, 2], [2, 10, 8], [2, 8, 8]], [Fraction(1, 2), 0, 0], [1, 2, 2]),
    "x2-mod20": ([[1, 2, 2], [2, 10, 8], [2, 8, 8]], [Fraction(1, 2), 4, 4], [1, 2, 2]),
    "x1-mod5-rank3": ([[4, 2, 2], [2, 2, 1], [2, 1, 2]], [0, 0, 0], [1, 1, 1]),
    "x2-mod5-rank3": ([[4, 2, 2], [2, 2, 1], [2, 1, 2]], [2, 1, 1], [1, 1, 1]),
    "x3-mod5-rank3": ([[4, 2, 2], [2, 2, 1], [2, 1, 2]], [1, 1, 0], [1, 1, 1]),
    "x1-22": ([[2, -2], [-2, 4]], [0, 0], [2, 2]),
    "x2-22": ([[2, -2], [-2, 4]], [0, 2], [2, 2]),
    "x1-24": ([[2, -2], [-2, 4]], [0, 0], [2, 4]),
    "x2-24": ([[2, -2], [-2, 4]], [0, 2], [2, 4]),
    "x1-mod12-222": ([[8, 4, -2], [4, 4, -2], [-2, -2, 2]], [0, 0, 0], [2, 2, 2]),
    "x2-mod12-222": ([[8, 4, -2], [4, 4, -2], [-2, -2, 2]], [2, 0, 0], [2, 2, 2]),
    "x3-mod12-222": ([[8, 4, -2], [4, 4, -2], [-2, -2, 2]], [4, 2, 0], [2, 2, 2]),
    "x1-mod8-112": ([[1, 1, 0], [1, 4, 2], [0, 2, 2]], [Fraction(1, 2), 0, 0], [1, 1, 2]),
    "x2-mod8-112": ([[1, 1, 0], [1, 4, 2], [0, 2, 2]], [Fraction(1, 2), 2, 2], [1, 1, 2]),
    "x1-48": ([[4, -4], [-4, 6]], [-2, 2], [4, 8]),
    "x2-48": ([[4, -4], [-4, 6]], [-2, 4], [4, 8]),
}

# the form 2i^2+j^2+k^2+2ij-2ik = (i+j)^2 + (i-k)^2 is only semidefinite
_Q222 = [[4, 2, -2], [2, 2, 0], [-2, 0, 2]]
_B222 = {
    "x1-222": ([0, 0, 1], Fraction(1)),
    "x2-222": ([2, 2, -1], Fraction(1, 2)),
    "x3-222": ([0, 1, 0], Fraction(1)),
    "x4-222": ([2, 1, 0], Fraction(1)),
}

EXAMPLE_IDS = tuple(["AG-ge-2k+3", "eta-hat-2k+3", "B-ori", "HJWZ"] + list(_FIXED) + list(_B222))


def _points_222(B, T):
    T = Fraction(T)
    R = math.isqrt(int(T)) + 2
    for i in range(R + 1):
        for j in range(R + 1 - i):
            for k in range(max(0, i - R), i + R + 1):
                n = (i, j, k)
                e = exponent_of(_Q222, B, 0, n)
                if e < T:
                    if e < 0:
                        raise AssertionError("negative exponent in a semidefinite sum")
                    yield n, e


def example_sum(section_id: str, T, k: int | None = None, i: int | None = None) -> PuiseuxSeries:
    """Left-hand sum of a named application display."""
    if section_id == "AG-ge-2k+3":
        _check_ki(k, i, 2, k + 1)
        Q, B, d = _ag_q2_form(k, i)
        return quadratic_sum(Q, B, 0, d, T)
    if section_id == "eta-hat-2k+3":
        _check_ki(k, i, 1, k + 1)
        Q, B, d = _eta_hat_form(k, i)
        # the form is only semidefinite for k >= 2 (null vector leaves the orthant)
        return quadratic_sum(Q, B, 0, d, T, points=enumerate_points_copositive(Q, B, 0, T))
    if section_id == "B-ori":
        return bressoud_eq38_sum(k, i, T)
    if section_id == "HJWZ":
        return hjwz_sum(k, i, T)
    if section_id in _FIXED:
        Q, B, d = _FIXED[section_id]
        return quadratic_sum(Q, B, 0, d, T)
    if section_id in _B222:
        B, scale = _B222[section_id]
        return quadratic_sum(_Q222, B, 0, [2, 2, 2], T, scale=scale, points=_points_222(B, T))
    raise KeyError(f"unknown example id {section_id!r}")


def example_quadruple(section_id: str, k: int | None = None, i: int | None = None) -> NahmQuadruple:
    """The (A, B, C, D) data of a display that is a plain generalized Nahm sum."""
    if section_id == "AG-ge-2k+3":
        Q, B, d = _ag_q2_form(k, i)
    elif section_id == "eta-hat-2k+3" and k == 1:
        Q, B, d = _eta_hat_form(k, i)
    elif section_id in _FIXED:
        Q, B, d = _FIXED[section_id]
    else:
        raise KeyError(f"{section_id!r} has no positive definite quadruple form")
    return NahmQuadruple.from_form(Q, B, 0, d)
