"""High-precision evaluation in the upper half-plane and numeric verification.

Components are evaluated factor by factor from their defining products or
sums.  Every evaluation runs to a truncation T chosen from the precision
and Im(tau), records the partial value at T and continues to 2T; if the
two disagree beyond half the working precision the value is flagged and
the truncation is doubled.  This is a heuristic certificate, not a tail
bound.
"""

from __future__ import annotations

import math
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .cyclo import CycloElement
from .products import Const, Eta, GenEta, Poch, Product, QPower, Theta, Weber, bernoulli2
from .series import PuiseuxSeries
from .transforms import Rule, TransformCase, gen_eta_multiplier, get_transform_case, registry_transform_cases

__all__ = [
    "BigComplex",
    "MobiusMap",
    "Evaluation",
    "GUARD_BITS",
    "DEFAULT_BASES",
    "PASS_THRESHOLD",
    "FAIL_THRESHOLD",
    "parse_tau",
    "mobius_apply",
    "sqrt_principal",
    "Evaluator",
    "eval_series",
    "eval_product",
    "verify_transform",
    "verify_cases",
    "verify_theta_lemmas",
    "theta_inversion_residuals",
    "g_quarter_residual",
    "h_quarter_residual",
    "theta_t_rule_exact",
    "verify_gen_eta",
    "verify_classical",
    "relative_residual",
]

GUARD_BITS = 32
PASS_THRESHOLD = 1e-25
FAIL_THRESHOLD = 1e-3
DEFAULT_BASES = ("i", "1/5+1/2*i", "-1/3+2/3*i")
_MAX_DOUBLINGS = 6


# ---------------------------------------------------------------------------
# numbers


@dataclass(frozen=True)
class BigComplex:
    """mpmath complex value tagged with its precision in bits.

    Arithmetic runs at the smaller precision of the two operands, so a
    result never claims more bits than its inputs carry.
    """

    value: mpmath.mpc
    prec: int

    @classmethod
    def make(cls, re_, im_=0, prec: int = 192) -> "BigComplex":
        with mpmath.workprec(prec):
            return cls(mpmath.mpc(_mpf(re_), _mpf(im_)), prec)

    def _lift(self, other):
        if isinstance(other, BigComplex):
            return other.value, min(self.prec, other.prec)
        return other, self.prec

    def _op(self, other, fn):
        v, p = self._lift(other)
        with mpmath.workprec(p):
            return BigComplex(fn(self.value, v), p)

    def __add__(self, o):
        return self._op(o, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, o):
        return self._op(o, lambda a, b: a - b)

    def __rsub__(self, o):
        return self._op(o, lambda a, b: b - a)

    def __mul__(self, o):
        return self._op(o, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self._op(o, lambda a, b: a / b)

    def __rtruediv__(self, o):
        return self._op(o, lambda a, b: b / a)

    def __neg__(self):
        return BigComplex(-self.value, self.prec)

    def __abs__(self):
        with mpmath.workprec(self.prec):
            return abs(self.value)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def __complex__(self):
        return complex(self.value)

    def __str__(self):
        with mpmath.workprec(self.prec):
            return mpmath.nstr(self.value, max(15, int(self.prec * 0.30103) - 2))


def _mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _val(x):
    return x.value if isinstance(x, BigComplex) else mpmath.mpc(x)


_TAU_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=\s*[+-]|\s*$))?\s*"
    r"(?:(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i)?\s*$"
)


def parse_tau(text: str, prec: int = 192) -> BigComplex:
    """Parse ``a/b+c/d*i`` (parts optional, e.g. ``i``, ``2i``, ``-1/3+2/3*i``)."""
    m = _TAU_RE.match(text)
    if not m or (m.group("re") is None and "i" not in text):
        raise ValueError(f"cannot parse tau {text!r}; expected the form a/b+c/d*i")
    re_ = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    if "i" in text:
        im_ = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            im_ = -im_
    else:
        im_ = Fraction(0)
    if im_ <= 0:
        raise ValueError(f"tau = {text} is not in the upper half-plane")
    return BigComplex.make(re_, im_, prec)


@dataclass(frozen=True)
class MobiusMap:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("Mobius map must have determinant 1")


def mobius_apply(g: MobiusMap, tau):
    t = _val(tau)
    den = g.c * t + g.d
    if den == 0:
        raise ZeroDivisionError("tau is a pole of the map")
    out = (g.a * t + g.b) / den
    return BigComplex(out, tau.prec) if isinstance(tau, BigComplex) else out


def sqrt_principal(z):
    """Square root with argument in (-pi/2, pi/2]."""
    v = _val(z)
    if v == 0:
        raise ZeroDivisionError("square root of zero requested as an automorphy factor")
    r = mpmath.sqrt(v)
    return BigComplex(r, z.prec) if isinstance(z, BigComplex) else r


# ---------------------------------------------------------------------------
# evaluation


@dataclass
class Evaluation:
    value: BigComplex
    converged: bool
    diff: float
    truncation: float


def _to_mp(c):
    if isinstance(c, CycloElement):
        return c.to_complex()
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpf(c) if isinstance(c, int) else mpmath.mpc(c)


def _qpow(tau, e):
    return mpmath.expjpi(2 * tau * _mpf(Fraction(e)))


def _start_truncation(tau, prec: int) -> float:
    return (prec + GUARD_BITS) * math.log(2) / (2 * math.pi * float(mpmath.im(tau)))


def _poch(tau, a, step, u, T):
    """prod_{n >= 0} (1 - u q^{a + n step}) over exponents below T and 2T."""
    a, step = Fraction(a), Fraction(step)
    e = a
    term = u * _qpow(tau, a)
    ratio = _qpow(tau, step)
    p = mpmath.mpc(1)
    snap = None
    while e < 2 * T:
        if snap is None and e >= T:
            snap = p
        p *= 1 - term
        term *= ratio
        e += step
    return (p if snap is None else snap), p


def _theta_sum(tau, kind, j, m, T):
    j, m = Fraction(j), Fraction(m)
    # exponent (2mk + j)^2 / (4m) < 2T
    half = math.sqrt(8 * float(m) * 2 * T) / (2 * float(m)) + abs(float(j)) + 2
    kmax = int(half) + 1
    lo = hi = mpmath.mpc(0)
    for k in range(-kmax, kmax + 1):
        x = 2 * m * k + j
        e = x * x / (4 * m)
        if e >= 2 * T:
            continue
        t = _qpow(tau, e)
        if kind == "g" and k % 2:
            t = -t
        hi += t
        if e < T:
            lo += t
    return lo, hi


def _factor_pair(f, tau, T):
    if isinstance(f, QPower):
        v = _qpow(tau, f.exponent)
        return v, v
    if isinstance(f, Const):
        v = _to_mp(f.value)
        return v, v
    if isinstance(f, Eta):
        s = Fraction(f.scale)
        pre = _qpow(tau, s / 24)
        lo, hi = _poch(tau, s, s, 1, T)
        return pre * lo, pre * hi
    if isinstance(f, Weber):
        s = Fraction(f.scale)
        if f.kind == "f2":
            pre, (lo, hi) = _qpow(tau, s / 24), _poch(tau, s, s, -1, T)
        else:
            pre = _qpow(tau, -s / 48)
            lo, hi = _poch(tau, s / 2, s, -1 if f.kind == "f" else 1, T)
        return pre * lo, pre * hi
    if isinstance(f, Theta):
        s = Fraction(f.scale)
        return _theta_sum(_mpf(s) * tau, f.kind, f.j, f.m, T / float(s))
    if isinstance(f, Poch):
        return _poch(tau, f.a, f.step, _to_mp(f.u), T)
    if isinstance(f, GenEta):
        return _gen_eta_pair(tau * _mpf(Fraction(f.scale)), f.N, f.g, f.h, T / float(f.scale))
    raise TypeError(f"no numeric evaluator for {f!r}")


def _gen_eta_pair(tau, N, g, h, T):
    if g % N == 0 and h % N == 0:
        raise ValueError("g and h are both divisible by N")
    x = Fraction(g, N)
    pre = _qpow(tau, bernoulli2(x) / 2)
    zeta = mpmath.expjpi(mpmath.mpf(2 * h) / N)
    lo1, hi1 = _poch(tau, x, 1, zeta, T)
    lo2, hi2 = _poch(tau, 1 - x, 1, 1 / zeta, T)
    return pre * lo1 * lo2, pre * hi1 * hi2


def _close(lo, hi, prec) -> tuple[bool, float]:
    d = abs(hi - lo)
    scale = abs(hi)
    if scale == 0:
        return d == 0, float(d)
    rel = d / scale
    return rel < mpmath.mpf(2) ** (-prec / 2), float(rel)


class Evaluator:
    """Factor-level cache for one working precision."""

    def __init__(self, prec: int = 192):
        if prec < 64:
            raise ValueError("precision below 64 bits is not supported")
        self.prec = prec
        self._cache: dict = {}
        self.flags: list[str] = []

    def factor(self, f, tau):
        key = (f, tau.real, tau.imag)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        T = _start_truncation(tau, self.prec)
        for _ in range(_MAX_DOUBLINGS):
            lo, hi = _factor_pair(f, tau, T)
            ok, rel = _close(lo, hi, self.prec)
            if ok:
                break
            T *= 2
        else:
            self.flags.append(f"{f.label()} at tau={mpmath.nstr(tau, 8)}: doubling rule failed (rel {rel:.2e})")
        self._cache[key] = hi
        return hi

    def product(self, p: Product, tau):
        v = mpmath.mpc(1)
        for f, e in p.factors:
            fv = self.factor(f, tau)
            v *= fv ** e if e > 0 else 1 / fv ** (-e)
        return v

    def vector(self, comps, tau):
        return [self.product(p, tau) for p in comps]


def eval_product(p: Product, tau, prec: int = 192) -> Evaluation:
    """Value of a product recipe at tau with the doubling certificate."""
    t = _val(tau)
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        v = ev.product(p, t)
    return Evaluation(BigComplex(v, prec), not ev.flags, 0.0, _start_truncation(t, prec))


def eval_series(s: PuiseuxSeries, tau, prec: int = 192) -> Evaluation:
    """Sum of coeff * q^e; the partial sum below trunc/2 is compared with the full sum."""
    t = _val(tau)
    if mpmath.im(t) <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    with mpmath.workprec(prec + GUARD_BITS):
        half = s.trunc / 2 if s.trunc != math.inf else math.inf
        lo = hi = mpmath.mpc(0)
        for e, c in s.items():
            term = _to_mp(c) * _qpow(t, e)
            hi += term
            if e < half:
                lo += term
        ok, rel = _close(lo, hi, prec)
        if s.trunc == math.inf:
            ok, rel = True, 0.0
    return Evaluation(BigComplex(hi, prec), ok, rel, s.trunc)


def relative_residual(left, right) -> tuple[float, bool]:
    """max_i |L_i - R_i| / max(|L_i|, |R_i|) and whether L is close to -R instead."""
    worst = 0.0
    worst_neg = 0.0
    floor = max((max(abs(a), abs(b)) for a, b in zip(left, right)), default=mpmath.mpf(0))
    floor = floor * mpmath.mpf(2) ** (-mpmath.mp.prec // 2)
    for a, b in zip(left, right):
        scale = max(abs(a), abs(b), floor)
        if scale == 0:
            continue
        worst = max(worst, float(abs(a - b) / scale))
        worst_neg = max(worst_neg, float(abs(a + b) / scale))
    sign_flip = worst > FAIL_THRESHOLD and worst_neg < 1e-10
    return worst, sign_flip


# ---------------------------------------------------------------------------
# transformation checks


def _automorphy(rule: Rule, tau):
    if rule.automorphy is None:
        return mpmath.mpc(1)
    a_re, a_im, b = rule.automorphy
    a = mpmath.mpc(_mpf(Fraction(a_re)), _mpf(Fraction(a_im)))
    return mpmath.sqrt(a * tau + _mpf(Fraction(b)))


def _rule_point(rule: Rule, base):
    """Point tau where the rule is tested and the mapped argument."""
    N = rule.N
    if rule.kind == "T":
        return base, base + 1
    if rule.kind == "S":
        tau = base / mpmath.sqrt(N)
        return tau, -1 / (N * tau)
    tau = (base - 1) / N
    return tau, tau / (N * tau + 1)


def _matvec(M, v):
    return [mpmath.fsum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _check_rule(ev: Evaluator, case: TransformCase, rule: Rule, base) -> dict:
    tau, mapped = _rule_point(rule, base)
    left = ev.vector(case.components, mapped)
    right_vec = ev.vector(rule.right if rule.right is not None else case.components, tau)
    M = rule.matrix.numeric()
    j = _automorphy(rule, tau)
    right = [j * x for x in _matvec(M, right_vec)]
    res, flip = relative_residual(left, right)
    return {"tau": mpmath.nstr(tau, 12), "residual": res, "branch_sign_mismatch": flip}


@dataclass
class RuleReport:
    name: str
    kind: str
    N: int
    source: str
    expect: str
    residuals: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def worst(self) -> float:
        return max((p["residual"] for p in self.residuals), default=0.0)

    @property
    def best(self) -> float:
        return min((p["residual"] for p in self.residuals), default=0.0)

    @property
    def verdict(self) -> str:
        if self.expect == "pass":
            return "pass" if self.worst < PASS_THRESHOLD else "FAIL"
        return "EXPECTED-FAIL" if self.best > FAIL_THRESHOLD else "UNEXPECTED-PASS"

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "EXPECTED-FAIL")

    def to_dict(self) -> dict:
        return {"rule": self.name, "kind": self.kind, "N": self.N, "source": self.source,
                "expect": self.expect, "verdict": self.verdict, "max_residual": self.worst,
                "points": self.residuals, "notes": self.notes}


@dataclass
class TransformReport:
    case: str
    anchor: str
    prec: int
    rules: list
    flags: list
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rules) and not self.flags

    def to_dict(self) -> dict:
        return {"case": self.case, "anchor": self.anchor, "prec": self.prec, "ok": self.ok,
                "rules": [r.to_dict() for r in self.rules], "convergence_flags": self.flags,
                "certificate": "heuristic doubling of the truncation (T vs 2T)"}


def verify_transform(case, taus=None, prec: int = 192) -> TransformReport:
    """Residuals of every rule of a case at the sample points."""
    if isinstance(case, str):
        case = get_transform_case(case)
    if prec < 64:
        raise ValueError("precision below 64 bits is not supported")
    start = time.perf_counter()
    bases = [parse_tau(t, prec) if isinstance(t, str) else t for t in (taus or DEFAULT_BASES)]
    reports = []
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        for rule in case.rules:
            rep = RuleReport(rule.name, rule.kind, rule.N, rule.source, rule.expect)
            for b in bases:
                point = _check_rule(ev, case, rule, _val(b))
                if point["branch_sign_mismatch"]:
                    rep.notes.append(f"branch-sign mismatch at tau={point['tau']}")
                rep.residuals.append(point)
            reports.append(rep)
    return TransformReport(case.name, case.anchor, prec, reports, ev.flags, time.perf_counter() - start)


def _verify_named(args):
    name, taus, prec = args
    return verify_transform(name, taus, prec)


def verify_cases(names=None, taus=None, prec: int = 192, jobs: int = 1) -> list[TransformReport]:
    """Run several cases, optionally in worker processes; output order follows ``names``."""
    names = list(names) if names else [c.name for c in registry_transform_cases()]
    work = [(n, list(taus) if taus else None, prec) for n in names]
    if jobs <= 1 or len(work) <= 1:
        return [_verify_named(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_named, work))


# ---------------------------------------------------------------------------
# lemmas on theta series and eta functions


def _th(kind, j, m, scale=1):
    return Theta(kind, Fraction(j), Fraction(m), Fraction(scale))


def _res(a, b, size=0) -> float:
    """|a - b| relative to max(|a|, |b|, size); size guards identically vanishing sides."""
    scale = max(abs(a), abs(b), size)
    return float(abs(a - b) / scale) if scale else 0.0


def _sized_sum(pairs):
    """Sum of c * v and the size sum |v| that sets the scale of round-off."""
    pairs = list(pairs)
    return mpmath.fsum(c * v for c, v in pairs), mpmath.fsum(abs(v) for _, v in pairs)


def theta_inversion_residuals(j, m, tau, prec: int = 192) -> dict:
    """S-rules of h_{j,m} and g_{j,m} at -1/tau and the T-rule, numerically."""
    j, m = Fraction(j), Fraction(m)
    if j.denominator != 1 or (2 * m).denominator != 1 or m <= 0:
        raise ValueError("the S-rule is stated for integer j and m in N/2")
    out = {}
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        t = _val(tau)
        u = -1 / t
        pre = mpmath.sqrt(-1j * t) / mpmath.sqrt(_mpf(2 * m))
        rhs, size = _sized_sum((mpmath.expjpi(_mpf(j * k / m)), ev.factor(_th("h", k, m), t))
                               for k in range(int(2 * m)))
        out["h-S"] = _res(ev.factor(_th("h", j, m), u), pre * rhs, abs(pre) * size)
        rhs, size = _sized_sum((mpmath.expjpi(_mpf(j * k / (2 * m))), ev.factor(_th("h", Fraction(k, 2), m), t))
                               for k in range(1, int(4 * m), 2))
        out["g-S"] = _res(ev.factor(_th("g", j, m), u), pre * rhs, abs(pre) * size)
        if (j + m).denominator == 1:
            ph = mpmath.expjpi(_mpf(j * j / (2 * m)))
            for kind in ("h", "g"):
                out[f"{kind}-T"] = _res(ev.factor(_th(kind, j, m), t + 1), ph * ev.factor(_th(kind, j, m), t))
    return out


def theta_t_rule_exact(j, m, T: int = 60) -> bool:
    """g_{j,m}(tau+1) = e^{pi i j^2/2m} g_{j,m}(tau) on series: all exponents are j^2/4m mod 1."""
    from .products import theta_g, theta_h

    j, m = Fraction(j), Fraction(m)
    if (j + m).denominator != 1:
        raise ValueError("the T-rule is stated for j + m an integer")
    target = (j * j / (4 * m)) % 1
    for fn in (theta_g, theta_h):
        classes = fn(j, m, T, check=False).exponent_classes()
        if classes and classes != {target}:
            return False
    return True


def _quarter_range_check(j: int, k: int):
    if not isinstance(k, int) or k < 2 or not isinstance(j, int) or not 0 <= j <= k:
        raise ValueError("the lemma covers integers k >= 2 and 0 <= j <= k")


def g_quarter_residual(j: int, k: int, tau, prec: int = 192) -> float:
    """g_{j,k}(-1/(4 tau)) against the four-case formula."""
    _quarter_range_check(j, k)
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        t = _val(tau)
        pre = 2 * mpmath.sqrt(-2j * t) / mpmath.sqrt(k)
        kind = "h" if j % 2 == 0 else "g"
        top = (k - 2) // 2 if k % 2 == 0 else (k - 3) // 2
        terms = [(mpmath.cospi(mpmath.mpf((2 * l + 1) * j) / (2 * k)), ev.factor(_th(kind, 2 * l + 1, k), t))
                 for l in range(top + 1)]
        if k % 2 == 1 and j % 2 == 0:
            terms.append((mpmath.cospi(mpmath.mpf(j) / 2) / 2, ev.factor(_th("h", k, k), t)))
        s, size = _sized_sum(terms)
        return _res(ev.factor(_th("g", j, k), -1 / (4 * t)), pre * s, abs(pre) * size)


def h_quarter_residual(j: int, k: int, tau, prec: int = 192) -> float:
    """h_{j,k}(-1/(4 tau)) against the four-case formula."""
    _quarter_range_check(j, k)
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        t = _val(tau)
        pre = 2 * mpmath.sqrt(-2j * t) / mpmath.sqrt(k)
        kind = "h" if j % 2 == 0 else "g"
        top = (k - 2) // 2 if k % 2 == 0 else (k - 1) // 2
        terms = [(mpmath.cospi(mpmath.mpf(l * j) / k), ev.factor(_th(kind, 2 * l, k), t)) for l in range(1, top + 1)]
        terms.append((mpmath.mpf(1) / 2, ev.factor(_th(kind, 0, k), t)))
        if k % 2 == 0 and j % 2 == 0:
            terms.append((mpmath.cospi(mpmath.mpf(j) / 2) / 2, ev.factor(_th("h", k, k), t)))
        s, size = _sized_sum(terms)
        return _res(ev.factor(_th("h", j, k), -1 / (4 * t)), pre * s, abs(pre) * size)


def verify_theta_lemmas(j, m, tau, prec: int = 192) -> dict:
    """Every applicable theta lemma for the index pair (j, m)."""
    out = {}
    j, m = Fraction(j), Fraction(m)
    if j.denominator == 1 and (2 * m).denominator == 1:
        out.update({f"lemma-S/T {k}": v for k, v in theta_inversion_residuals(j, m, tau, prec).items()})
    if j.denominator == 1 and m.denominator == 1 and m >= 2 and 0 <= j <= m:
        out["lemma-g(-1/4tau)"] = g_quarter_residual(int(j), int(m), tau, prec)
        out["lemma-h(-1/4tau)"] = h_quarter_residual(int(j), int(m), tau, prec)
    return out


def verify_gen_eta(N: int, g: int, h: int, gamma, tau, prec: int = 192) -> dict:
    """E_{g,h}(gamma tau) against the multiplier times E_{g',h'}(tau)."""
    a, b, c, d = gamma
    mult, (g2, h2) = gen_eta_multiplier(N, g, h, (a, b, c, d))
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        t = _val(tau)
        u = (a * t + b) / (c * t + d)
        left = ev.factor(GenEta(N, g, h), u)
        right = mult.to_complex() * ev.factor(GenEta(N, g2, h2), t)
        res, flip = relative_residual([left], [right])
    return {"N": N, "g": g, "h": h, "gamma": [a, b, c, d], "image": [g2, h2],
            "residual": res, "branch_sign_mismatch": flip, "flags": ev.flags}


def verify_classical(tau, prec: int = 192) -> dict:
    """Eta and Weber inversion and translation rules at tau."""
    with mpmath.workprec(prec + GUARD_BITS):
        ev = Evaluator(prec)
        t = _val(tau)
        u = -1 / t
        F = lambda f, x: ev.factor(f, x)  # noqa: E731
        eta, f, f1, f2 = Eta(Fraction(1)), Weber("f"), Weber("f1"), Weber("f2")
        r2 = mpmath.sqrt(2)
        e24 = mpmath.expjpi(mpmath.mpf(-1) / 24)
        return {
            "eta(-1/t)": _res(F(eta, u), mpmath.sqrt(-1j * t) * F(eta, t)),
            "eta(t+1)": _res(F(eta, t + 1), mpmath.expjpi(mpmath.mpf(1) / 12) * F(eta, t)),
            "f(-1/t)": _res(F(f, u), F(f, t)),
            "f2(-1/t)": _res(F(f2, u), F(f1, t) / r2),
            "f1(-1/t)": _res(F(f1, u), r2 * F(f2, t)),
            "f(t+1)": _res(F(f, t + 1), e24 * F(f1, t)),
            "f1(t+1)": _res(F(f1, t + 1), e24 * F(f, t)),
            "f2(t+1)": _res(F(f2, t + 1), mpmath.expjpi(mpmath.mpf(1) / 12) * F(f2, t)),
        }
