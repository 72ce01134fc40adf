"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as coefficient vectors on the power basis
1, x, ..., x^(phi(n)-1) modulo the n-th cyclotomic polynomial, with
x standing for zeta_n = exp(2 pi i / n).  Elements of different
conductors are combined by lifting both to the lcm conductor.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce

__all__ = [
    "CycloElement",
    "cyclotomic_poly",
    "cyclo_embed",
    "euler_phi",
    "sqrt_int",
    "cos_pi",
    "sin_pi",
    "exp_pi_i",
    "as_cyclo",
]

_lock = threading.Lock()
_phi_cache: dict[int, tuple[int, ...]] = {}
_pow_cache: dict[int, tuple[tuple[int, ...], ...]] = {}


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # integer polynomial division, den monic; lowest degree first
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d and cached.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    got = _phi_cache.get(n)
    if got is not None:
        return got
    divisors = [d for d in range(1, n) if n % d == 0]
    parts = [cyclotomic_poly(d) for d in divisors]
    with _lock:
        got = _phi_cache.get(n)
        if got is not None:
            return got
        num = [-1] + [0] * (n - 1) + [1]
        for p in parts:
            num = _poly_divexact(num, p)
        poly = tuple(num)
        _phi_cache[n] = poly
    return poly


def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for k = 0..n-1 as integer vectors of length phi(n)."""
    got = _pow_cache.get(n)
    if got is not None:
        return got
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    table = tuple(rows)
    with _lock:
        _pow_cache.setdefault(n, table)
    return _pow_cache[n]


def _norm_frac(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class CycloElement:
    """Element of Q(zeta_n)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        deg = len(cyclotomic_poly(n)) - 1
        coeffs = tuple(_norm_frac(Fraction(c) if not isinstance(c, int) else c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for conductor {n}, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs

    # construction helpers -------------------------------------------------

    @classmethod
    def from_rational(cls, c, n: int = 1) -> "CycloElement":
        deg = len(cyclotomic_poly(n)) - 1
        return cls(n, (c,) + (0,) * (deg - 1))

    @classmethod
    def from_powers(cls, n: int, powers: dict[int, object]) -> "CycloElement":
        """Sum of c * zeta_n^k over the mapping k -> c."""
        table = _power_table(n)
        acc = [0] * len(table[0])
        for k, c in powers.items():
            if not c:
                continue
            row = table[k % n]
            for j, r in enumerate(row):
                if r:
                    acc[j] += c * r
        return cls(n, acc)

    # structure ------------------------------------------------------------

    def lift(self, m: int) -> "CycloElement":
        """Same number viewed in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        step = m // self.n
        return CycloElement.from_powers(m, {k * step: c for k, c in enumerate(self.coeffs) if c})

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        a, b = _common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # rational elements hash like their rational value
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloElement({self.n}, {self.poly_string()})"

    def poly_string(self, var: str = "z") -> str:
        """Human-readable polynomial in `var` (the primitive root)."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = str(c) + ("*" + mono if mono else "")
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for s in parts[1:]:
            out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
        return out

    # arithmetic -----------------------------------------------------------

    def __neg__(self):
        return CycloElement(self.n, [-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = _common(self, other)
        return CycloElement(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = _common(self, other)
        return CycloElement(a.n, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycloElement(self.n, (0,) * len(self.coeffs))
            return CycloElement(self.n, [c * other for c in self.coeffs])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = _common(self, other)
        n = a.n
        table = _power_table(n)
        deg = len(a.coeffs)
        raw: dict[int, object] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    raw[i + j] = raw.get(i + j, 0) + x * y
        acc = [0] * deg
        for k, c in raw.items():
            if not c:
                continue
            if k < deg:
                acc[k] += c
                continue
            for j, r in enumerate(table[k % n]):
                if r:
                    acc[j] += c * r
        return CycloElement(n, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.n
        # monomial shortcut: c * zeta^k
        nz = [k for k, c in enumerate(self.coeffs) if c]
        if len(nz) == 1:
            k = nz[0]
            c = Fraction(self.coeffs[k])
            return CycloElement.from_powers(n, {(-k) % n: 1 / c})
        s, _ = _poly_xgcd_inverse(list(self.coeffs), list(cyclotomic_poly(n)))
        deg = len(self.coeffs)
        s = s + [0] * (deg - len(s))
        return CycloElement(n, s[:deg])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloElement(self.n, [Fraction(c) / other for c in self.coeffs])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloElement.from_rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CycloElement":
        """Complex conjugate: zeta -> zeta^{-1}."""
        n = self.n
        return CycloElement.from_powers(n, {(-k) % n: c for k, c in enumerate(self.coeffs) if c})

    def to_complex(self, ctx=None):
        """Numeric value with zeta_n -> exp(2 pi i / n) at the ambient mpmath precision."""
        import mpmath

        ctx = ctx or mpmath.mp
        z = ctx.mpc(0)
        for k, c in enumerate(self.coeffs):
            if c:
                z += ctx.mpf(Fraction(c).numerator) / Fraction(c).denominator * ctx.expjpi(ctx.mpf(2 * k) / self.n)
        return z


def _coerce(x):
    if isinstance(x, CycloElement):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloElement.from_rational(x, 1)
    return None


def _common(a: CycloElement, b: CycloElement):
    if a.n == b.n:
        return a, b
    m = a.n * b.n // math.gcd(a.n, b.n)
    return a.lift(m), b.lift(m)


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    _trim(a)
    b = _trim([Fraction(x) for x in b])
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _trim(a)
    return q, a


def _poly_sub_mul(a, q, b):
    out = [Fraction(x) for x in a]
    for i, x in enumerate(q):
        if not x:
            continue
        for j, y in enumerate(b):
            while len(out) <= i + j:
                out.append(Fraction(0))
            out[i + j] -= x * y
    return _trim(out)


def _poly_xgcd_inverse(a, m):
    """Return (s, g) with s * a = g (mod m) and g the constant 1."""
    r0, r1 = _trim([Fraction(x) for x in m]), _trim([Fraction(x) for x in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    s = [x / c for x in s1]
    _, s = _poly_divmod(s, m)
    return [_norm_frac(x) for x in s], 1


# convenient constructors ---------------------------------------------------


def cyclo_embed(m: int, n: int) -> CycloElement:
    """zeta_n^m reduced modulo Phi_n."""
    return CycloElement.from_powers(n, {m % n: 1})


def as_cyclo(x) -> CycloElement:
    if isinstance(x, CycloElement):
        return x
    return CycloElement.from_rational(x, 1)


def exp_pi_i(a, b=1) -> CycloElement:
    """exp(i pi a / b) for integers a, b (b > 0)."""
    fr = Fraction(a, b)
    n = 2 * fr.denominator
    return cyclo_embed(fr.numerator % n, n)


def cos_pi(a, b=1) -> CycloElement:
    """cos(pi a / b) = (zeta + zeta^-1) / 2 with zeta = exp(i pi a / b)."""
    z = exp_pi_i(a, b)
    return (z + z.conjugate()) * Fraction(1, 2)


def sin_pi(a, b=1) -> CycloElement:
    """sin(pi a / b) = (zeta - zeta^-1) / (2i)."""
    z = exp_pi_i(a, b)
    i = cyclo_embed(1, 4)
    return (z - z.conjugate()) * Fraction(1, 2) * (-i)


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _legendre(a: int, p: int) -> int:
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def _sqrt_prime(p: int) -> CycloElement:
    if p == 2:
        z = cyclo_embed(1, 8)
        return z + z.conjugate()
    gauss = CycloElement.from_powers(p, {a: _legendre(a, p) for a in range(1, p)})
    if p % 4 == 3:
        # gauss = i sqrt(p)
        gauss = gauss * (-cyclo_embed(1, 4))
    return gauss


def sqrt_int(k) -> CycloElement:
    """Positive square root of a positive rational k as a cyclotomic number."""
    k = Fraction(k)
    if k <= 0:
        raise ValueError("sqrt_int needs a positive argument")
    num, den = k.numerator, k.denominator
    # sqrt(num/den) = sqrt(num*den)/den
    n = num * den
    out = CycloElement.from_rational(Fraction(1, den), 1)
    for p, e in _prime_factors(n).items():
        out = out * (p ** (e // 2))
        if e % 2:
            out = out * _sqrt_prime(p)
    import mpmath

    with mpmath.workprec(64):
        if mpmath.re(out.to_complex()) < 0:
            out = -out
    return out


def conductor_lcm(elements) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), (e.n for e in elements), 1)
