"""Truncated Puiseux series in q over Q or a cyclotomic field.

A series stores the coefficient of q^(k/M) under the integer key k, where
M is the series' own exponent denominator.  Coefficients are known for
every exponent strictly below ``trunc``; ``trunc = INF`` marks an exact
(finite) series.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .cyclo import CycloElement

__all__ = [
    "INF",
    "PuiseuxSeries",
    "RingMismatch",
    "TruncationError",
    "Mismatch",
    "series_from_term",
    "one",
    "zero",
    "add",
    "mul",
    "invert",
    "substitute_q_power",
    "pochhammer",
    "compare_to_order",
    "negative_floor",
]

INF = math.inf

_floor: contextvars.ContextVar[Fraction] = contextvars.ContextVar("negative_floor", default=Fraction(-10))


class RingMismatch(TypeError):
    pass


class TruncationError(ValueError):
    pass


@contextlib.contextmanager
def negative_floor(value):
    """Temporarily change the lowest exponent a series may carry."""
    token = _floor.set(Fraction(value))
    try:
        yield
    finally:
        _floor.reset(token)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _ring_of(c) -> int:
    return c.n if isinstance(c, CycloElement) else 1


def _ceil_key(trunc, den: int):
    if trunc == INF:
        return INF
    return math.ceil(Fraction(trunc) * den)


class PuiseuxSeries:
    __slots__ = ("ring", "den", "terms", "trunc")

    def __init__(self, terms: dict[int, object], den: int = 1, trunc=INF, ring: int = 1, _check=True):
        if trunc != INF:
            trunc = Fraction(trunc)
        limit = _ceil_key(trunc, den)
        clean = {}
        for k, c in terms.items():
            if c and k < limit:
                if ring != 1 and not isinstance(c, CycloElement):
                    c = CycloElement.from_rational(c, ring)
                elif isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                clean[k] = c
        # smallest exponent denominator
        g = den
        for k in clean:
            g = math.gcd(g, k)
            if g == 1:
                break
        if g > 1:
            clean = {k // g: c for k, c in clean.items()}
            den //= g
        self.terms = clean
        self.den = den
        self.trunc = trunc
        self.ring = ring
        if _check and clean:
            lo = min(clean)
            if Fraction(lo, den) < _floor.get():
                raise OverflowError(f"exponent {Fraction(lo, den)} below the negative floor {_floor.get()}")

    # inspection -----------------------------------------------------------

    def order(self):
        """Least stored exponent; for a series with no terms, its truncation order."""
        if not self.terms:
            return self.trunc
        return Fraction(min(self.terms), self.den)

    def items(self) -> Iterator[tuple[Fraction, object]]:
        for k in sorted(self.terms):
            yield Fraction(k, self.den), self.terms[k]

    def coeff(self, exponent) -> object:
        exponent = Fraction(exponent)
        if exponent >= self.trunc:
            raise TruncationError(f"coefficient of q^{exponent} unknown (truncated at {self.trunc})")
        k = exponent * self.den
        if k.denominator != 1:
            return 0 if self.ring == 1 else CycloElement.from_rational(0, self.ring)
        c = self.terms.get(k.numerator)
        if c is None:
            return 0 if self.ring == 1 else CycloElement.from_rational(0, self.ring)
        return c

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self) -> str:
        shown = []
        for e, c in list(self.items())[:8]:
            shown.append(f"({c})q^{e}" if e else f"({c})")
        tail = f" + O(q^{self.trunc})" if self.trunc != INF else ""
        more = " + ..." if len(self.terms) > 8 else ""
        return "PuiseuxSeries(" + (" + ".join(shown) or "0") + more + tail + ")"

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.ring == other.ring and self.trunc == other.trunc and self.den == other.den
                and self.terms == other.terms)

    __hash__ = None

    # operators ------------------------------------------------------------

    def __add__(self, other):
        return add(self, _promote(other, self))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries({k: -c for k, c in self.terms.items()}, self.den, self.trunc, self.ring, _check=False)

    def __sub__(self, other):
        return add(self, -_promote(other, self))

    def __rsub__(self, other):
        return add(_promote(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return mul(self, invert(other))
        if isinstance(other, CycloElement):
            return self.scale(other.inverse())
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        result = one(self.ring)
        base = self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    # transformations ------------------------------------------------------

    def scale(self, c) -> "PuiseuxSeries":
        ring = self.ring
        if isinstance(c, CycloElement):
            if ring == 1 and not c.is_rational():
                raise RingMismatch("cyclotomic scalar on a rational series; call to_ring first")
            if c.is_rational():
                c = c.rational_value()
        return PuiseuxSeries({k: v * c for k, v in self.terms.items()}, self.den,
                             self.trunc if c else self.trunc, ring, _check=False)

    def shift(self, exponent) -> "PuiseuxSeries":
        """Multiply by q^exponent."""
        e = Fraction(exponent)
        den = _lcm(self.den, e.denominator)
        f = den // self.den
        off = e.numerator * (den // e.denominator)
        return PuiseuxSeries({k * f + off: c for k, c in self.terms.items()}, den,
                             self.trunc + e if self.trunc != INF else INF, self.ring)

    def truncate(self, T) -> "PuiseuxSeries":
        if T > self.trunc:
            raise TruncationError(f"cannot extend truncation from {self.trunc} to {T}")
        return PuiseuxSeries(self.terms, self.den, T, self.ring, _check=False)

    def to_ring(self, n: int) -> "PuiseuxSeries":
        """View the series over Q(zeta_n), n a multiple of the current conductor."""
        if n == self.ring:
            return self
        if n % self.ring:
            raise RingMismatch(f"cannot move ring {self.ring} into {n}")
        if self.ring == 1:
            terms = {k: CycloElement.from_rational(c, n) for k, c in self.terms.items()}
        else:
            terms = {k: c.lift(n) for k, c in self.terms.items()}
        return PuiseuxSeries(terms, self.den, self.trunc, n, _check=False)

    def residue_part(self, modulus, residue) -> "PuiseuxSeries":
        """Terms whose exponent e satisfies e = residue (mod modulus)."""
        modulus, residue = Fraction(modulus), Fraction(residue)
        keep = {}
        for k, c in self.terms.items():
            if ((Fraction(k, self.den) - residue) / modulus).denominator == 1:
                keep[k] = c
        return PuiseuxSeries(keep, self.den, self.trunc, self.ring, _check=False)

    def exponent_classes(self) -> set[Fraction]:
        """Distinct values of exponent mod 1."""
        return {Fraction(k % self.den, self.den) for k in self.terms}


def _promote(x, like: PuiseuxSeries) -> PuiseuxSeries:
    if isinstance(x, PuiseuxSeries):
        return x
    if isinstance(x, CycloElement) and like.ring != 1:
        x = x.lift(like.ring) if x.n != like.ring else x
    return PuiseuxSeries({0: x}, 1, INF, like.ring)


def series_from_term(ring: int, exponent, coeff, trunc=INF) -> PuiseuxSeries:
    e = Fraction(exponent)
    if isinstance(coeff, CycloElement) and coeff.n != ring:
        coeff = coeff.lift(ring)
    return PuiseuxSeries({e.numerator: coeff}, e.denominator, trunc, ring)


def one(ring: int = 1) -> PuiseuxSeries:
    return series_from_term(ring, 0, 1)


def zero(ring: int = 1, trunc=INF) -> PuiseuxSeries:
    return PuiseuxSeries({}, 1, trunc, ring)


def _check_ring(a: PuiseuxSeries, b: PuiseuxSeries):
    if a.ring != b.ring:
        raise RingMismatch(f"ring mismatch: Q(zeta_{a.ring}) vs Q(zeta_{b.ring})")


def add(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    _check_ring(a, b)
    den = _lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    out = {k * fa: c for k, c in a.terms.items()}
    for k, c in b.terms.items():
        k *= fb
        out[k] = out.get(k, 0) + c
    return PuiseuxSeries(out, den, min(a.trunc, b.trunc), a.ring)


def mul(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    """Cauchy product, known below min(T_a + ord b, T_b + ord a)."""
    _check_ring(a, b)
    trunc = min(a.trunc + b.order(), b.trunc + a.order())
    if not a.terms or not b.terms:
        return zero(a.ring, trunc)
    den = _lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    limit = _ceil_key(trunc, den)
    bs = sorted((k * fb, c) for k, c in b.terms.items())
    if len(a.terms) < len(bs):
        a_items = sorted((k * fa, c) for k, c in a.terms.items())
        a_items, bs = bs, a_items
    else:
        a_items = [(k * fa, c) for k, c in a.terms.items()]
    out: dict[int, object] = {}
    get = out.get
    for ka, ca in a_items:
        for kb, cb in bs:
            k = ka + kb
            if k >= limit:
                break
            out[k] = get(k, 0) + ca * cb
    return PuiseuxSeries(out, den, trunc, a.ring)


def invert(a: PuiseuxSeries) -> PuiseuxSeries:
    """Multiplicative inverse, known below T_a - 2 ord(a)."""
    if not a.terms:
        raise ZeroDivisionError("cannot invert a series with no known nonzero term")
    k0 = min(a.terms)
    c0 = a.terms[k0]
    inv_c0 = c0.inverse() if isinstance(c0, CycloElement) else Fraction(1) / c0
    if isinstance(inv_c0, Fraction) and inv_c0.denominator == 1:
        inv_c0 = inv_c0.numerator
    # u = a / (c0 q^{e0}) = 1 + sum_{j>0} u_j q^{j g / den}
    rest = {k - k0: c * inv_c0 for k, c in a.terms.items() if k != k0}
    g = 0
    for k in rest:
        g = math.gcd(g, k)
    e0 = Fraction(k0, a.den)
    new_trunc = a.trunc - 2 * e0 if a.trunc != INF else INF
    if not rest:
        # monomial: exact inverse if exact, else known to new_trunc
        return PuiseuxSeries({-k0: inv_c0}, a.den, new_trunc, a.ring)
    if a.trunc == INF:
        raise TruncationError("inverse of an exact non-monomial series needs a truncation order; truncate first")
    # known range for u: exponent < a.trunc - e0 ; in units of g/den
    n_terms = math.ceil((a.trunc - e0) * a.den / g)
    u = sorted((k // g, c) for k, c in rest.items() if k // g < n_terms)
    one_ = 1 if a.ring == 1 else CycloElement.from_rational(1, a.ring)
    b = [one_] + [0] * (n_terms - 1)
    for n in range(1, n_terms):
        s = 0
        for j, c in u:
            if j > n:
                break
            bj = b[n - j]
            if bj:
                s = s + c * bj
        b[n] = -s
    terms = {}
    for n, c in enumerate(b):
        if c:
            terms[n * g - k0] = c * inv_c0
    return PuiseuxSeries(terms, a.den, new_trunc, a.ring)


def substitute_q_power(a: PuiseuxSeries, k) -> PuiseuxSeries:
    """q -> q^k for a positive rational k."""
    k = Fraction(k)
    if k <= 0:
        raise ValueError("substitution power must be positive")
    den = a.den * k.denominator
    terms = {key * k.numerator: c for key, c in a.terms.items()}
    trunc = a.trunc * k if a.trunc != INF else INF
    return PuiseuxSeries(terms, den, trunc, a.ring)


def pochhammer(a_exp, unit_root=None, step=1, n=INF, T=INF) -> PuiseuxSeries:
    """prod_{k=0}^{n-1} (1 - u q^{a_exp + k*step}) truncated at T.

    ``unit_root`` defaults to 1; pass -1 for (-q^a; q^s)_n.  Infinite
    products need every factor exponent to be positive.
    """
    a_exp, step = Fraction(a_exp), Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    u = 1 if unit_root is None else unit_root
    ring = _ring_of(u) if isinstance(u, CycloElement) else 1
    if isinstance(u, CycloElement) and u.is_rational():
        u, ring = u.rational_value(), 1
    if n == INF:
        if a_exp <= 0:
            raise ValueError("infinite Pochhammer product with a nonpositive exponent factor")
        if T == INF:
            raise TruncationError("infinite product needs a truncation order")
    if n == 0:
        return one(ring)
    den = _lcm(a_exp.denominator, step.denominator)
    ka = a_exp.numerator * (den // a_exp.denominator)
    ks = step.numerator * (den // step.denominator)
    one_ = 1 if ring == 1 else CycloElement.from_rational(1, ring)
    cur: dict[int, object] = {0: one_}
    if n == INF:
        limit = _ceil_key(T, den)
        k = ka
        while k < limit:
            nxt = dict(cur)
            for key, c in cur.items():
                nk = key + k
                if nk < limit:
                    v = nxt.get(nk, 0) - u * c
                    if v:
                        nxt[nk] = v
                    else:
                        nxt.pop(nk, None)
            cur = nxt
            k += ks
        return PuiseuxSeries(cur, den, T, ring)
    for i in range(int(n)):
        k = ka + i * ks
        nxt = dict(cur)
        for key, c in cur.items():
            nk = key + k
            v = nxt.get(nk, 0) - u * c
            if v:
                nxt[nk] = v
            else:
                nxt.pop(nk, None)
        cur = nxt
    return PuiseuxSeries(cur, den, T, ring)


@dataclass(frozen=True)
class Mismatch:
    exponent: Fraction
    left: object
    right: object

    def __str__(self):
        return f"q^{self.exponent}: {self.left} != {self.right}"


def compare_to_order(a: PuiseuxSeries, b: PuiseuxSeries, T) -> Mismatch | None:
    """First exponent below T where a and b differ, or None if they agree."""
    _check_ring(a, b)
    if T > a.trunc or T > b.trunc:
        raise TruncationError(f"order {T} exceeds known range ({a.trunc}, {b.trunc})")
    den = _lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    limit = _ceil_key(T, den)
    ta = {k * fa: c for k, c in a.terms.items() if k * fa < limit}
    tb = {k * fb: c for k, c in b.terms.items() if k * fb < limit}
    for k in sorted(set(ta) | set(tb)):
        ca, cb = ta.get(k, 0), tb.get(k, 0)
        if ca != cb:
            return Mismatch(Fraction(k, den), ca, cb)
    return None


def sum_series(items: Iterable[PuiseuxSeries], ring: int = 1) -> PuiseuxSeries:
    total = zero(ring)
    for s in items:
        total = add(total, s)
    return total
