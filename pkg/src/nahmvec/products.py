"""Named product-form series: eta, Weber, theta g/h, generalized eta, crank, J.

Besides the direct builders there is a small recipe language: a
``Product`` is a finite product of ``Factor`` objects raised to integer
powers.  Recipes know their leading exponent without expanding, so they
can be expanded to any truncation order with the correct per-factor
slack, and the numeric layer can evaluate them factor by factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloElement, cyclo_embed
from .series import (
    INF,
    PuiseuxSeries,
    compare_to_order,
    invert,
    mul,
    one,
    pochhammer,
    series_from_term,
    substitute_q_power,
    zero,
)

__all__ = [
    "eta_series",
    "weber_f",
    "weber_f1",
    "weber_f2",
    "gen_dedekind_eta",
    "bernoulli2",
    "theta_g",
    "theta_h",
    "theta_reduce",
    "crank_gf",
    "j_product",
    "J",
    "ThetaMismatch",
    "Factor",
    "Eta",
    "Weber",
    "Theta",
    "Poch",
    "GenEta",
    "Const",
    "QPower",
    "Product",
    "eta_quotient",
]


class ThetaMismatch(AssertionError):
    """Sum and product forms of a theta series disagree."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _pad(T, extra):
    return INF if T == INF else T + extra


# ---------------------------------------------------------------------------
# direct builders


def eta_series(m=1, T=INF) -> PuiseuxSeries:
    """q^{m/24} (q^m; q^m)_inf known below T."""
    m = _frac(m)
    if m <= 0:
        raise ValueError("eta scale must be positive")
    base = pochhammer(m, step=m, T=T - m / 24)
    return base.shift(m / 24)


def weber_f(T, scale=1) -> PuiseuxSeries:
    s = _frac(scale)
    return pochhammer(s / 2, -1, s, T=T + s / 48).shift(-s / 48)


def weber_f1(T, scale=1) -> PuiseuxSeries:
    s = _frac(scale)
    return pochhammer(s / 2, 1, s, T=T + s / 48).shift(-s / 48)


def weber_f2(T, scale=1) -> PuiseuxSeries:
    s = _frac(scale)
    return pochhammer(s, -1, s, T=T - s / 24).shift(s / 24)


def bernoulli2(x) -> Fraction:
    x = _frac(x)
    return x * x - x + Fraction(1, 6)


def _root(N: int, k: int):
    if N == 1:
        return 1
    if N == 2:
        return (-1) ** (k % 2)
    return cyclo_embed(k % N, N)


def _gen_eta_parts(N: int, g: int, h: int):
    """Split E^{(N)}_{g,h} into prefactor exponent, finite factors and infinite tails.

    Returns (ring, prefactor_exp, finite, tails) where finite is a list of
    (exponent, unit) for the factors with exponent <= 0 and tails is a list
    of (first positive exponent, unit).
    """
    if g % N == 0 and h % N == 0:
        raise ValueError("g and h are both divisible by N")
    ring = N if N >= 3 else 1
    u1 = _root(N, h)
    u2 = _root(N, -h)
    finite = []
    tails = []
    # first family: exponents m - 1 + g/N, m >= 1
    for start, u in ((Fraction(g, N), u1), (1 - Fraction(g, N), u2)):
        e = start
        while e <= 0:
            finite.append((e, u))
            e += 1
        tails.append((e, u))
    return ring, bernoulli2(Fraction(g, N)) / 2, finite, tails


def _gen_eta_order(N: int, g: int, h: int):
    ring, pre, finite, _ = _gen_eta_parts(N, g, h)
    order = pre
    for e, u in finite:
        if e == 0 and u == 1:
            return INF
        if e < 0:
            order += e
    return order


def gen_dedekind_eta(N: int, g: int, h: int, T) -> PuiseuxSeries:
    """E^{(N)}_{g,h}(tau) over Q(zeta_N), computed from the product definition."""
    ring, pre, finite, tails = _gen_eta_parts(N, g, h)
    order = _gen_eta_order(N, g, h)
    if order == INF:
        return zero(ring)
    # finite part: exact polynomial
    poly = one(ring)
    for e, u in finite:
        poly = mul(poly, _binomial(e, u, ring))
    low = poly.order()
    tail_T = T - pre - low
    result = poly
    for e, u in tails:
        tail = pochhammer(e, u, 1, INF, tail_T)
        if tail.ring != ring:
            tail = tail.to_ring(ring)
        result = mul(result, tail)
    result = result.shift(pre)
    return result.truncate(T) if result.trunc > T else result


def _binomial(e, u, ring) -> PuiseuxSeries:
    """1 - u q^e as an exact series."""
    if ring != 1:
        u = u.lift(ring) if isinstance(u, CycloElement) else CycloElement.from_rational(u, ring)
    return one(ring) - series_from_term(ring, e, u)


def theta_reduce(kind: str, j, m):
    """Reduce (j, m) to (sign, j0) with 0 <= j0 <= m using the period rules."""
    j, m = _frac(j), _frac(m)
    if m <= 0 or (2 * m).denominator != 1 or (2 * j).denominator != 1:
        raise ValueError("theta index needs m in N/2, j in Z/2")
    t = math.floor((j + m) / (2 * m))
    j0 = j - 2 * m * t
    sign = (-1) ** (t % 2) if kind == "g" else 1
    return sign, abs(j0)


def _theta_sum(kind: str, j, m, T) -> PuiseuxSeries:
    j, m = _frac(j), _frac(m)
    terms: dict[Fraction, int] = {}
    # exponent (2mk + j)^2 / (4m)
    bound = math.isqrt(int(4 * m * (T if T != INF else 0)) + 1) + 2 if T != INF else None
    if bound is None:
        raise ValueError("theta series needs a finite order")
    kmax = int((bound + abs(j)) / (2 * m)) + 2
    for k in range(-kmax, kmax + 1):
        x = 2 * m * k + j
        e = x * x / (4 * m)
        if e < T:
            c = (-1) ** (k % 2) if kind == "g" else 1
            terms[e] = terms.get(e, 0) + c
    den = 1
    for e in terms:
        den = den * e.denominator // math.gcd(den, e.denominator)
    return PuiseuxSeries({int(e * den): c for e, c in terms.items()}, den, T, 1)


def _theta_product(kind: str, j, m, T) -> PuiseuxSeries:
    sign, j0 = theta_reduce(kind, j, m)
    m = _frac(m)
    pre = j0 * j0 / (4 * m)
    inner_T = T - pre
    if j0 == m:
        if kind == "g":
            return zero(1, T)
        a = pochhammer(2 * m, -1, 2 * m, T=inner_T)
        b = pochhammer(2 * m, 1, 2 * m, T=inner_T)
        return (mul(mul(a, a), b) * 2).shift(pre)
    u = 1 if kind == "g" else -1
    p = mul(pochhammer(m + j0, u, 2 * m, T=inner_T), pochhammer(m - j0, u, 2 * m, T=inner_T))
    p = mul(p, pochhammer(2 * m, 1, 2 * m, T=inner_T))
    return (p * sign).shift(pre)


def _theta(kind: str, j, m, T, check: bool) -> PuiseuxSeries:
    s = _theta_sum(kind, j, m, T)
    if check:
        p = _theta_product(kind, j, m, T)
        bad = compare_to_order(s, p, T)
        if bad is not None:
            raise ThetaMismatch(f"{kind}_{{{j},{m}}} sum/product disagree at {bad}")
    return s


def theta_g(j, m, T, check: bool = True) -> PuiseuxSeries:
    """g_{j,m} = sum_k (-1)^k q^{m (k + j/2m)^2}, checked against the triple product."""
    return _theta("g", j, m, T, check)


def theta_h(j, m, T, check: bool = True) -> PuiseuxSeries:
    """h_{j,m} = sum_k q^{m (k + j/2m)^2}, checked against the triple product."""
    return _theta("h", j, m, T, check)


def crank_gf(z, T) -> PuiseuxSeries:
    """(q;q)_inf / ((zq;q)_inf (q/z;q)_inf) for a root of unity z."""
    if not isinstance(z, CycloElement) or z.is_rational():
        zv = z.rational_value() if isinstance(z, CycloElement) else z
        if zv == 1:
            return invert(pochhammer(1, 1, 1, INF, T))
        a = pochhammer(1, zv, 1, INF, T)
        b = pochhammer(1, Fraction(1) / zv, 1, INF, T)
        return mul(pochhammer(1, 1, 1, INF, T), invert(mul(a, b)))
    ring = z.n
    top = pochhammer(1, 1, 1, INF, T).to_ring(ring)
    a = pochhammer(1, z, 1, INF, T)
    b = pochhammer(1, z.inverse(), 1, INF, T)
    return mul(top, invert(mul(a, b)))


def J(m, T) -> PuiseuxSeries:
    """J_m = (q^m; q^m)_inf."""
    return pochhammer(m, 1, m, INF, T)


def j_product(a, m, T) -> PuiseuxSeries:
    """J_{a,m} = (q^a, q^{m-a}, q^m; q^m)_inf for 0 < a < m."""
    a, m = _frac(a), _frac(m)
    if not 0 < a < m:
        raise ValueError("j_product needs 0 < a < m")
    p = mul(pochhammer(a, 1, m, INF, T), pochhammer(m - a, 1, m, INF, T))
    return mul(p, pochhammer(m, 1, m, INF, T))


# ---------------------------------------------------------------------------
# recipes


class Factor:
    """One named factor of a product recipe."""

    ring: int = 1

    def order(self):
        raise NotImplementedError

    def expand(self, T) -> PuiseuxSeries:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.label()


@dataclass(frozen=True, repr=False)
class Eta(Factor):
    """eta(scale * tau)."""

    scale: Fraction = Fraction(1)

    def order(self):
        return _frac(self.scale) / 24

    def expand(self, T):
        return eta_series(self.scale, T)

    def label(self):
        return f"eta({self.scale}t)"


@dataclass(frozen=True, repr=False)
class Weber(Factor):
    """Weber function f, f1 or f2 at scale * tau."""

    kind: str
    scale: Fraction = Fraction(1)

    def order(self):
        s = _frac(self.scale)
        return s / 24 if self.kind == "f2" else -s / 48

    def expand(self, T):
        fn = {"f": weber_f, "f1": weber_f1, "f2": weber_f2}[self.kind]
        return fn(T, self.scale)

    def label(self):
        return f"{self.kind}({self.scale}t)"


@dataclass(frozen=True, repr=False)
class Theta(Factor):
    """g_{j,m} or h_{j,m} at scale * tau."""

    kind: str
    j: Fraction
    m: Fraction
    scale: Fraction = Fraction(1)

    def order(self):
        j, m = _frac(self.j), _frac(self.m)
        sign, j0 = theta_reduce(self.kind, j, m)
        if self.kind == "g" and j0 == m:
            return INF
        return j0 * j0 / (4 * m) * _frac(self.scale)

    def expand(self, T):
        s = _frac(self.scale)
        if self.order() == INF:
            return zero(1)
        base = _theta(self.kind, self.j, self.m, T / s, check=False)
        return substitute_q_power(base, s) if s != 1 else base

    def label(self):
        return f"{self.kind}[{self.j},{self.m}]({self.scale}t)"


@dataclass(frozen=True, repr=False)
class Poch(Factor):
    """(u q^a; q^step)_inf with a > 0; u = +1, -1 or a root of unity."""

    a: Fraction
    step: Fraction
    u: object = 1

    @property
    def ring(self):  # type: ignore[override]
        return self.u.n if isinstance(self.u, CycloElement) and not self.u.is_rational() else 1

    def order(self):
        return Fraction(0)

    def expand(self, T):
        return pochhammer(self.a, self.u, self.step, INF, T)

    def label(self):
        u = "" if self.u == 1 else ("-" if self.u == -1 else f"({self.u})")
        return f"({u}q^{self.a};q^{self.step})"


@dataclass(frozen=True, repr=False)
class GenEta(Factor):
    """E^{(N)}_{g,h}(scale * tau)."""

    N: int
    g: int
    h: int
    scale: Fraction = Fraction(1)

    @property
    def ring(self):  # type: ignore[override]
        return self.N if self.N >= 3 else 1

    def order(self):
        o = _gen_eta_order(self.N, self.g, self.h)
        return o if o == INF else o * _frac(self.scale)

    def expand(self, T):
        s = _frac(self.scale)
        base = gen_dedekind_eta(self.N, self.g, self.h, T / s)
        return substitute_q_power(base, s) if s != 1 else base

    def label(self):
        return f"E{self.N}[{self.g},{self.h}]({self.scale}t)"


@dataclass(frozen=True, repr=False)
class Const(Factor):
    value: object

    @property
    def ring(self):  # type: ignore[override]
        v = self.value
        return v.n if isinstance(v, CycloElement) and not v.is_rational() else 1

    def order(self):
        return Fraction(0) if self.value else INF

    def expand(self, T):
        v = self.value
        if isinstance(v, CycloElement) and v.is_rational():
            v = v.rational_value()
        return series_from_term(self.ring, 0, v)

    def label(self):
        return str(self.value)


@dataclass(frozen=True, repr=False)
class QPower(Factor):
    exponent: Fraction

    def order(self):
        return _frac(self.exponent)

    def expand(self, T):
        return series_from_term(1, self.exponent, 1)

    def label(self):
        return f"q^{self.exponent}"


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class Product:
    """Finite product of factors raised to integer powers."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        items = []
        for f in factors:
            if isinstance(f, Factor):
                items.append((f, 1))
            else:
                items.append((f[0], int(f[1])))
        self.factors = tuple((f, p) for f, p in items if p)

    @property
    def ring(self) -> int:
        r = 1
        for f, _ in self.factors:
            r = _lcm(r, f.ring)
        return r

    def order(self):
        total = Fraction(0)
        for f, p in self.factors:
            o = f.order()
            if o == INF:
                if p < 0:
                    raise ZeroDivisionError(f"negative power of the zero factor {f.label()}")
                return INF
            total += p * o
        return total

    def expand(self, T) -> PuiseuxSeries:
        """Expansion known below T."""
        ring = self.ring
        O = self.order()
        if O == INF:
            return zero(ring)
        result = one(ring)
        for f, p in self.factors:
            o = f.order()
            t = T - O + o
            s = f.expand(t)
            if s.ring != ring:
                s = s.to_ring(ring)
            if s.trunc == INF and len(s) > 1:
                s = s.truncate(t)
            if p < 0:
                s = invert(s)
                p = -p
            result = mul(result, s ** p)
        if result.trunc > T:
            result = result.truncate(T)
        return result

    def __mul__(self, other: "Product") -> "Product":
        return Product(self.factors + other.factors)

    def __pow__(self, e: int) -> "Product":
        return Product(tuple((f, p * e) for f, p in self.factors))

    def inverse(self) -> "Product":
        return self ** -1

    def label(self) -> str:
        parts = []
        for f, p in self.factors:
            parts.append(f.label() if p == 1 else f"{f.label()}^{p}")
        return " * ".join(parts) or "1"

    def __repr__(self):
        return f"Product({self.label()})"


def eta_quotient(pairs) -> Product:
    """prod eta(m tau)^e from (m, e) pairs."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("eta quotient needs at least one factor")
    return Product([(Eta(_frac(m)), e) for m, e in pairs])
