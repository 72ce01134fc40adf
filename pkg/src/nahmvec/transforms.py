"""Transformation matrices, multiplier systems and the case registry.

Matrix entries are exact elements of cyclotomic fields: cos, sin and
exp of rational multiples of pi, square roots of rationals (through
Gauss sums) and their sums, products and quotients all live there.
Equality of differently written entries is therefore decided exactly,
and numbers appear only when a matrix is evaluated at some precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloElement, as_cyclo, cos_pi, cyclo_embed, exp_pi_i, sin_pi, sqrt_int
from .identities import product_recipe
from .products import Eta, Product, QPower, Theta, Weber

__all__ = [
    "AlgebraicMatrix",
    "SingularMatrix",
    "matrix_A",
    "matrix_Lambda",
    "matrix_Lambda_tilde",
    "matrix_Lambda_hat",
    "matrix_B",
    "matrix_C",
    "alpha",
    "alpha_matrix",
    "compose_gamma0",
    "cyclo_constant_check",
    "gen_eta_multiplier",
    "Rule",
    "TransformCase",
    "registry_transform_cases",
    "get_transform_case",
    "transform_catalog_json",
]


class SingularMatrix(ZeroDivisionError):
    pass


def _c(x) -> CycloElement:
    return as_cyclo(x) if not isinstance(x, CycloElement) else x


class AlgebraicMatrix:
    """Dense matrix over cyclotomic fields."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_c(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be non-empty and of equal length")
        self.rows = rows

    @classmethod
    def diag(cls, entries) -> "AlgebraicMatrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "AlgebraicMatrix":
        return cls.diag([1] * n)

    @classmethod
    def blocks(cls, grid) -> "AlgebraicMatrix":
        """Assemble from a grid of blocks; ``None`` stands for a zero block."""
        heights = [next(b.shape[0] for b in row if b is not None) for row in grid]
        widths = [next(grid[r][c].shape[1] for r in range(len(grid)) if grid[r][c] is not None)
                  for c in range(len(grid[0]))]
        rows = []
        for r, row in enumerate(grid):
            for i in range(heights[r]):
                line = []
                for c, b in enumerate(row):
                    line.extend(b.rows[i] if b is not None else [0] * widths[c])
                rows.append(line)
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicMatrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, AlgebraicMatrix) else False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def __neg__(self):
        return AlgebraicMatrix([[-x for x in r] for r in self.rows])

    def __add__(self, other: "AlgebraicMatrix"):
        return AlgebraicMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "AlgebraicMatrix"):
        return self + (-other)

    def __mul__(self, scalar):
        s = _c(scalar)
        return AlgebraicMatrix([[x * s for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "AlgebraicMatrix") -> "AlgebraicMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = self.rows[i][0] * other.rows[0][j]
                for t in range(1, m):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return AlgebraicMatrix(out)

    def transpose(self) -> "AlgebraicMatrix":
        return AlgebraicMatrix(list(zip(*self.rows)))

    def is_diagonal(self) -> bool:
        n, m = self.shape
        return n == m and all(not self.rows[i][j] for i in range(n) for j in range(m) if i != j)

    def diagonal(self) -> list[CycloElement]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def inverse(self) -> "AlgebraicMatrix":
        """Gauss-Jordan elimination over the field."""
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices are invertible")
        a = [list(r) + [as_cyclo(1 if i == j else 0) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrix("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return AlgebraicMatrix([r[n:] for r in a])

    def numeric(self):
        """Entries as mpmath complex numbers at the ambient precision."""
        return [[x.to_complex() for x in r] for r in self.rows]

    def to_strings(self, digits: int = 20) -> list[list[str]]:
        import mpmath

        with mpmath.workdps(digits + 10):
            tol = mpmath.mpf(10) ** -(digits + 5)
            return [[mpmath.nstr(mpmath.chop(x.to_complex(), tol), digits) for x in r] for r in self.rows]

    def __repr__(self):
        return f"AlgebraicMatrix({self.shape[0]}x{self.shape[1]})"


# ---------------------------------------------------------------------------
# matrix builders


def _need_k(k: int):
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


def matrix_A(k: int) -> AlgebraicMatrix:
    """floor(k/2) square matrix of cos((2i-1)(2j-1) pi / 2k)."""
    _need_k(k)
    n = k // 2
    return AlgebraicMatrix([[cos_pi((2 * i - 1) * (2 * j - 1), 2 * k) for j in range(1, n + 1)]
                            for i in range(1, n + 1)])


def _odd_upto(bound: int) -> list[int]:
    return list(range(1, bound + 1, 2))


def matrix_Lambda(k: int) -> AlgebraicMatrix:
    """diag(exp(pi i t^2 / 2k)) over odd t < k."""
    _need_k(k)
    return AlgebraicMatrix.diag([exp_pi_i(t * t, 2 * k) for t in _odd_upto(k - 1)])


def matrix_Lambda_tilde(k: int) -> AlgebraicMatrix:
    """diag(exp(-pi i t^2 / 2k)) over odd t <= k."""
    _need_k(k)
    return AlgebraicMatrix.diag([exp_pi_i(-t * t, 2 * k) for t in _odd_upto(k)])


def matrix_Lambda_hat(K: int) -> AlgebraicMatrix:
    """diag(exp(-pi i t^2 / 4K)) over odd t <= K - 2, for odd K >= 5."""
    if K < 5 or K % 2 == 0:
        raise ValueError("K must be odd and at least 5")
    return AlgebraicMatrix.diag([exp_pi_i(-t * t, 4 * K) for t in _odd_upto(K - 2)])


def matrix_B(k: int) -> AlgebraicMatrix:
    _need_k(k)
    n = (k + 1) // 2
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if k % 2 == 1 and j == (k + 1) // 2:
                row.append(as_cyclo(Fraction(1, 2) * (-1) ** (i - 1)))
            else:
                row.append(cos_pi((i - 1) * (2 * j - 1), k))
        rows.append(row)
    return AlgebraicMatrix(rows)


def matrix_C(k: int) -> AlgebraicMatrix:
    _need_k(k)
    n = (k + 1) // 2
    return AlgebraicMatrix([[as_cyclo(Fraction(1, 2)) if j == 1 else cos_pi((2 * i - 1) * (j - 1), k)
                             for j in range(1, n + 1)] for i in range(1, n + 1)])


def alpha(k: int) -> CycloElement:
    """1 / (2 sqrt 3 sin(k pi / 9)) for k in {1, 2, 4}."""
    if k not in (1, 2, 4):
        raise ValueError("alpha is defined for k in {1, 2, 4}")
    return (sqrt_int(3) * sin_pi(k, 9) * 2).inverse()


def alpha_matrix() -> AlgebraicMatrix:
    a1, a2, a4 = alpha(1), alpha(2), alpha(4)
    return AlgebraicMatrix([[a1, a2, a4], [a2, -a4, -a1], [a4, -a1, a2]])


def compose_gamma0(S: AlgebraicMatrix, T: AlgebraicMatrix, back: AlgebraicMatrix | None = None) -> AlgebraicMatrix:
    """S T^{-1} S, the matrix of tau -> tau/(N tau + 1).

    Input is X(tau+1) = T X(tau) and X(-1/(N tau)) = S X(tau).  When the
    Fricke image is a different vector Y, pass Y's T-matrix as ``T`` and the
    matrix of Y(-1/(N tau)) in terms of X(tau) as ``back``.
    """
    if not T.is_diagonal():
        raise ValueError("T-matrix must be diagonal")
    if any(not x for x in T.diagonal()):
        raise SingularMatrix("T-matrix is singular")
    Tinv = AlgebraicMatrix.diag([x.inverse() for x in T.diagonal()])
    return S @ Tinv @ (S if back is None else back)


# ---------------------------------------------------------------------------
# cyclotomic constants of the mod 9 proof


def _z18(e: int) -> CycloElement:
    return cyclo_embed(e, 18)


def _z9(e: int) -> CycloElement:
    return cyclo_embed(2 * e, 18)


def _alpha18(t: int) -> tuple[CycloElement, CycloElement]:
    """alpha_t = num/den inside Q(zeta_18), using sqrt(3) i = zeta_9^3 - zeta_9^-3."""
    s3i = _z9(3) - _z9(-3)
    return as_cyclo(-1).lift(18), s3i * (_z18(t) - _z18(-t))


def cyclo_constant_check() -> list[dict]:
    """Nine a_rs = +-alpha_t equalities and the two reductions, exactly in Q(zeta_18)."""
    one = as_cyclo(1).lift(18)
    z3inv = _z9(-3)
    rows = [
        # (name, prefactor, numerator polynomial, z power in (1 - zeta_9^-z), expected sign, alpha index)
        ("a11", _z18(5), one, 1, 1, 1),
        ("a12", _z18(5), -(one - _z9(1) + _z9(2) + _z9(5)), 1, 1, 2),
        ("a13", _z18(5), _z9(2) - _z9(1) - _z9(4), 1, 1, 4),
        ("a21", _z9(2), one, 2, 1, 2),
        ("a22", _z9(2), -(one - _z9(2) + _z9(4) + _z9(10)), 2, -1, 4),
        ("a23", _z9(2), _z9(4) - _z9(2) - _z9(8), 2, -1, 1),
        ("a31", _z9(1), one, 4, 1, 4),
        ("a32", _z9(1), -(one - _z9(4) + _z9(8) + _z9(20)), 4, -1, 1),
        ("a33", _z9(1), _z9(8) - _z9(4) - _z9(16), 4, 1, 2),
    ]
    out = []
    for name, pre, poly, zp, sign, t in rows:
        num = pre * poly
        den = (one - _z9(-zp)) * (one - z3inv)
        anum, aden = _alpha18(t)
        # num/den == sign * anum/aden  <=>  num * aden == sign * anum * den
        ok = num * aden == anum * den * sign
        expected = ("" if sign > 0 else "-") + f"alpha_{t}"
        out.append({"identity": f"{name} = {expected}", "pass": bool(ok), "field": "Q(zeta_18)"})
    out.append({"identity": "zeta_18^9 = -1", "pass": _z18(9) == -one, "field": "Q(zeta_18)"})
    out.append({"identity": "zeta_18^11 (1 - zeta_9^8) = 1 - zeta_9",
                "pass": _z18(11) * (one - _z9(8)) == one - _z9(1), "field": "Q(zeta_18)"})
    # the alpha_t written with sin and sqrt(3) agree with the Q(zeta_18) form
    for t in (1, 2, 4):
        anum, aden = _alpha18(t)
        out.append({"identity": f"alpha_{t} = 1/(2 sqrt3 sin({t} pi/9))",
                    "pass": alpha(t) * aden == anum, "field": "Q(zeta_36)"})
    return out


# ---------------------------------------------------------------------------
# generalized eta multiplier


def gen_eta_multiplier(N: int, g: int, h: int, gamma) -> tuple[CycloElement, tuple[int, int]]:
    """(epsilon * exp(pi i delta), (g', h')) for gamma with c != 0, or the c = 0 shift rule."""
    a, b, c, d = gamma
    if a * d - b * c != 1:
        raise ValueError("gamma must have determinant 1")
    if g % N == 0 and h % N == 0:
        raise ValueError("(g, h) must not both be divisible by N")
    if c == 0:
        if (a, d) != (1, 1):
            raise ValueError("the c = 0 rule is stated for gamma = (1 b; 0 1)")
        x = Fraction(g, N)
        return exp_pi_i(b * (x * x - x + Fraction(1, 6))), (g, b * g + h)
    if c % 2:
        eps = exp_pi_i(b * d * (1 - c * c) + c * (a + d - 3), 6)
    elif d % 2:
        eps = cyclo_embed(3, 4) * exp_pi_i(a * c * (1 - d * d) + d * (b - c + 3), 6)
    else:  # pragma: no cover - c and d coprime
        raise ValueError("c and d cannot both be even")
    delta = Fraction(g * g * a * b + 2 * g * h * b * c + h * h * c * d, N * N) - Fraction(g * b + h * (d - 1), N)
    return eps * exp_pi_i(delta), (g * a + h * c, g * b + h * d)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Rule:
    """One transformation law of a vector X.

    kind "T":          X(tau + 1)            = M X(tau)
    kind "S":          X(-1/(N tau))         = j(tau) M Y(tau)
    kind "composite":  X(tau/(N tau + 1))    = j(tau) M Y(tau)

    ``automorphy`` is None or a triple (a_re, a_im, b): j(tau) is the
    principal square root of (a_re + i a_im) tau + b.  ``right`` is the
    vector Y (None means Y = X); ``back`` is the matrix of Y(-1/(N tau))
    in terms of X(tau) when Y differs from X.
    """

    name: str
    kind: str
    matrix: AlgebraicMatrix
    N: int = 1
    automorphy: tuple | None = None
    right: tuple | None = None
    right_labels: tuple = ()
    back: AlgebraicMatrix | None = None
    source: str = "stated"
    expect: str = "pass"
    display: str = ""


@dataclass(frozen=True)
class TransformCase:
    name: str
    anchor: str
    level: int
    components: tuple
    labels: tuple
    rules: tuple
    status: str = "modular"
    note: str = ""

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def t_matrix(self) -> AlgebraicMatrix:
        return next(r.matrix for r in self.rules if r.kind == "T")

    def summary(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "level": self.level,
            "dimension": len(self.components),
            "status": self.status,
            "rules": [{"name": r.name, "kind": r.kind, "N": r.N, "shape": list(r.matrix.shape),
                       "source": r.source, "expect": r.expect} for r in self.rules],
        }


def _q(e) -> QPower:
    return QPower(Fraction(e))


def _shifted(e, recipe: Product) -> Product:
    return Product([_q(e)]) * recipe


def _tdiag(exps) -> AlgebraicMatrix:
    """diag(exp(2 pi i e)) for rational e."""
    return AlgebraicMatrix.diag([exp_pi_i(2 * Fraction(e)) for e in exps])


def _zeta(n: int, e: int = 1) -> CycloElement:
    return cyclo_embed(e % n, n)


def _theta_vec(kind: str, js, k, scale=1) -> list[Theta]:
    return [Theta(kind, Fraction(j), Fraction(k), Fraction(scale)) for j in js]


def _times(prefix: list, vec: list) -> tuple:
    return tuple(Product(prefix + [f]) for f in vec)


def _order_tdiag(vectors) -> AlgebraicMatrix:
    return _tdiag([p.order() for p in vectors])


def _compose_rule(case_name: str, X, T: AlgebraicMatrix, S: Rule) -> Rule:
    """Composite rule X(tau/(N tau+1)) from the S-rule and T-matrices.

    None when the right-hand vector of the S-rule has no diagonal T-rule.
    """
    if S.right is None:
        M = compose_gamma0(S.matrix, T)
    elif not all(_single_class(p) for p in S.right):
        return None
    else:
        back = S.back if S.back is not None else S.matrix.inverse()
        M = compose_gamma0(S.matrix, _order_tdiag(S.right), back)
    aut = None
    if S.automorphy is not None:
        # j(u) j(tau) = (s / sqrt N) sqrt(N tau + 1) for j(tau) = sqrt(-i s tau)
        a_re, a_im, b = S.automorphy
        s = -Fraction(a_im)
        M = M * (sqrt_int(s * s / S.N))
        aut = (S.N, 0, 1)
    return Rule("composite-lemma", "composite", M, S.N, aut, source="composed",
                display=f"tau/({S.N}tau+1) from the S- and T-rules")


def _single_class(p: Product) -> bool:
    """True when every exponent of p lies in one class mod 1, so p(tau+1) is a multiple of p."""
    o = p.order()
    return len(p.expand(o + 4).exponent_classes()) <= 1


def _case(name, anchor, level, X, labels, T, rules, status="modular", note="", compose=True):
    rules = [Rule("T", "T", T, 1, source="stated", display="tau+1")] + list(rules)
    if compose:
        S = next((r for r in rules if r.kind == "S" and r.expect == "pass"), None)
        comp = _compose_rule(name, X, T, S) if S is not None else None
        if comp is not None:
            rules.append(comp)
    return TransformCase(name, anchor, level, tuple(X), tuple(labels), tuple(rules), status, note)


def _sqrt(x) -> CycloElement:
    return sqrt_int(Fraction(x))


def _g_odd(k: int) -> TransformCase:
    js = _odd_upto(k - 1)
    X = _times([], _theta_vec("g", js, k))
    A = matrix_A(k)
    S = Rule("S", "S", A * (_sqrt(k).inverse() * 2), 4, (0, -2, 0),
             display="G(-1/(4tau)) = 2 (-2i tau)^(1/2)/sqrt(k) A G(tau)")
    comp = Rule("composite", "composite", (A @ matrix_Lambda(k).inverse() @ A) * Fraction(4, k), 4, (4, 0, 1),
                display="G(tau/(4tau+1)) = 4 sqrt(4tau+1)/k A Lambda^-1 A G(tau)")
    return _case(f"G-odd-k{k}", "Gk-odd-4", 4, X, [f"g[{j},{k}]" for j in js], matrix_Lambda(k), [S, comp])


def _g_even(k: int) -> TransformCase:
    js = list(range(0, k, 2))
    X = _times([], _theta_vec("g", js, k))
    H = _times([], _theta_vec("h", _odd_upto(k), k))
    T = _tdiag([Fraction(j * j, 4 * k) for j in js])
    c = _sqrt(k).inverse() * 2
    S = Rule("S", "S", matrix_B(k) * c, 4, (0, -2, 0), right=H,
             right_labels=tuple(f"h[{j},{k}]" for j in _odd_upto(k)), back=matrix_C(k) * c,
             source="derived", display="G0(-1/(4tau)) = 2 (-2i tau)^(1/2)/sqrt(k) B H1(tau)")
    comp = Rule("composite", "composite",
                (matrix_B(k) @ matrix_Lambda_tilde(k) @ matrix_C(k)) * Fraction(4, k), 4, (4, 0, 1),
                display="G0(tau/(4tau+1)) = 4 sqrt(4tau+1)/k B Lambda~ C G0(tau)")
    return _case(f"G-even-k{k}", "G_k-2", 4, X, [f"g[{j},{k}]" for j in js], T, [S, comp])


def _rr() -> TransformCase:
    X = (_shifted(Fraction(-1, 60), product_recipe("RR", i=1)),
         _shifted(Fraction(11, 60), product_recipe("RR", i=2)))
    s1, s2 = sin_pi(1, 5), sin_pi(2, 5)
    P = AlgebraicMatrix([[s2, s1], [s1, -s2]]) * (_sqrt(5).inverse() * 2)
    T = AlgebraicMatrix.diag([_zeta(60, -1), _zeta(60, 11)])
    return _case("RR", "RR-vector", 1, X, ["q^(-1/60) G", "q^(11/60) H"], T,
                 [Rule("S", "S", P, 1, display="X(-1/tau) = 2/sqrt5 (sin ...) X(tau)")])


def _kr() -> TransformCase:
    shifts = (Fraction(-1, 18), Fraction(5, 18), Fraction(11, 18))
    X = tuple(_shifted(s, product_recipe("KR", i=n)) for n, s in zip((1, 2, 3), shifts))
    T = AlgebraicMatrix.diag([_zeta(18, -1), _zeta(18, 5), _zeta(18, 11)])
    S = Rule("S", "S", alpha_matrix(), 3, display="X(-1/tau) = (alpha matrix) X(tau/3)")
    return _case("KR", "goal", 3, X, ["q^(-1/18) b1", "q^(5/18) b2", "q^(11/18) b3"], T, [S],
                 note="product sides; the sum sides are the open mod 9 conjecture")


def _capparelli() -> TransformCase:
    X = (_shifted(Fraction(-1, 24), product_recipe("Capparelli", i=1)),
         _shifted(Fraction(5, 24), product_recipe("Capparelli", i=2)))
    T = AlgebraicMatrix.diag([_zeta(24, -1), _zeta(24, 5)])
    P = AlgebraicMatrix([[1, 1], [1, -1]]) * _sqrt(2).inverse()
    return _case("Capparelli", "X-Capparelli-S", 3, X, ["q^(-1/24) a1", "q^(5/24) a2"], T,
                 [Rule("S", "S", P, 3, display="X(-1/tau) = 1/sqrt2 (1 1; 1 -1) X(tau/3)")])


def _ag(k: int) -> TransformCase:
    K = 2 * k + 1
    ls = range(1, k + 1)
    shifts = [Fraction(-1, 24) + Fraction((2 * l - 1) ** 2, 8 * K) for l in ls]
    X = tuple(_shifted(s, product_recipe("AG", k, k + 1 - l)) for l, s in zip(ls, shifts))
    T = AlgebraicMatrix.diag([exp_pi_i(-1, 12) * exp_pi_i((2 * l - 1) ** 2, 4 * K) for l in ls])
    S = Rule("S", "S", matrix_A(K) * (_sqrt(K).inverse() * 2), 1, display="X(-1/tau) = 2/sqrt(2k+1) A X(tau)")
    return _case(f"AG-k{k}", "AG-S", 1, X, [f"x[{K},{k + 1 - l}]" for l in ls], T, [S])


def _bressoud(k: int, parity: int) -> TransformCase:
    if parity == 0:
        ts = list(range(0, k, 2))
    else:
        ts = _odd_upto(k - 1)
    shifts = [Fraction(-1, 24) + Fraction(t * t, 4 * k) for t in ts]
    X = tuple(_shifted(s, product_recipe("Bressoud", k, k - t)) for t, s in zip(ts, shifts))
    T = AlgebraicMatrix.diag([exp_pi_i(-1, 12) * exp_pi_i(t * t, 2 * k) for t in ts])
    eta4 = (Eta(Fraction(4)), -1)
    c = _sqrt(Fraction(2, k))
    if parity == 0:
        Y = _times([eta4], _theta_vec("h", _odd_upto(k), k))
        S = Rule("S", "S", matrix_B(k) * c, 4, right=Y, source="derived",
                 right_labels=tuple(f"h[{j},{k}]/eta(4t)" for j in _odd_upto(k)),
                 display="X0(-1/(4tau)) = sqrt(2/k) B H1(tau)/eta(4tau)")
        core = matrix_B(k) @ matrix_Lambda_tilde(k) @ matrix_C(k)
        shown = Rule("composite-as-printed", "composite", core * (exp_pi_i(1, 3) * Fraction(2, k)), 4,
                     expect="fail", display="printed scalar 2/k")
        fixed = Rule("composite", "composite", core * (exp_pi_i(1, 3) * Fraction(4, k)), 4, source="corrected",
                     display="X0(tau/(4tau+1)) = 4/k e^(pi i/3) B Lambda~ C X0(tau)")
        rules = [S, fixed, shown]
        note = "printed scalar 2/k of the composite rule is off by 2; 4/k verified"
    else:
        Y = _times([eta4], _theta_vec("g", ts, k))
        S = Rule("S", "S", matrix_A(k) * c, 4, right=Y, source="derived",
                 right_labels=tuple(f"g[{j},{k}]/eta(4t)" for j in ts),
                 display="X1(-1/(4tau)) = sqrt(2/k) A G1(tau)/eta(4tau)")
        comp = Rule("composite", "composite",
                    (matrix_A(k) @ matrix_Lambda(k).inverse() @ matrix_A(k)) * (exp_pi_i(1, 3) * Fraction(4, k)), 4,
                    display="X1(tau/(4tau+1)) = 4/k e^(pi i/3) A Lambda^-1 A X1(tau)")
        rules = [S, comp]
        note = ""
    name = f"Bressoud-X{parity}-k{k}"
    return _case(name, "cor-B", 4, X, [f"x[{2 * k},{k - t}]" for t in ts], T, rules, note=note)


def _ag_ge(k: int) -> TransformCase:
    K = 2 * k + 3
    ls = list(range(1, k + 2))
    shifts = [Fraction((2 * l - 1) ** 2, 8 * K) - Fraction(1, 8) for l in ls]
    X = tuple(_shifted(s, product_recipe("AG-ge-2k+3", k, k + 2 - l)) for l, s in zip(ls, shifts))
    T = _tdiag(shifts)
    js = [2 * l - 1 for l in ls]
    Y = _times([Weber("f", Fraction(2)), (Eta(Fraction(2)), -1)], _theta_vec("g", js, K, 2))
    A = matrix_A(K)
    S = Rule("S", "S", A * (_sqrt(2) * 2 / _sqrt(K)), 4, right=Y, source="derived",
             right_labels=tuple(f"f(2t) g[{j},{K}](2t)/eta(2t)" for j in js),
             display="X(-1/(4tau)) = 2 sqrt2/sqrt(2k+3) A f(2tau) G(2tau)/eta(2tau)")
    Li = matrix_Lambda(K).inverse()
    shown = Rule("composite-as-printed", "composite", (A @ Li @ A) * (exp_pi_i(1, 4) * Fraction(4, K)), 4,
                 expect="fail", display="printed Lambda^-1")
    fixed = Rule("composite", "composite", (A @ Li @ Li @ A) * (exp_pi_i(1, 4) * Fraction(4, K)), 4,
                 source="corrected", display="X(tau/(4tau+1)) = 4/(2k+3) e^(pi i/4) A Lambda^-2 A X(tau)")
    return _case(f"AG-ge-k{k}", "exam1-X-S", 4, X, [f"x[{K},{k + 2 - l}]" for l in ls], T, [S, fixed, shown],
                 note="k = 1 uses the product definition; the printed Lambda^-1 should be Lambda^-2")


def _eta_hat(k: int) -> TransformCase:
    K = 2 * k + 3
    ls = list(range(1, k + 2))
    shifts = [Fraction((2 * l - 1) ** 2, 2 * K) - Fraction(1, 24) for l in ls]
    X = tuple(_shifted(s, product_recipe("eta-hat-2k+3", k, k + 2 - l)) for l, s in zip(ls, shifts))
    T = _tdiag(shifts)
    js = [2 * l - 1 for l in ls]
    Y = _times([(Eta(Fraction(4)), -1)], _theta_vec("g", js, K, Fraction(1, 2)))
    A = matrix_A(K)
    S = Rule("S", "S", A * _sqrt(K).inverse(), 4, right=Y, source="derived",
             right_labels=tuple(f"g[{j},{K}](t/2)/eta(4t)" for j in js),
             display="X(-1/(4tau)) = 1/sqrt(2k+3) A G(tau/2)/eta(4tau)")
    comp = Rule("composite", "composite", (A @ matrix_Lambda_hat(K) @ A) * (exp_pi_i(1, 3) * Fraction(4, K)), 4,
                display="X(tau/(4tau+1)) = 4/(2k+3) e^(pi i/3) A Lambda^ A X(tau)")
    return _case(f"eta-hat-k{k}", "eta-hat-2k+3", 4, X, [f"x[{K},{k + 2 - l}]" for l in ls], T, [S, comp])


def _x111() -> TransformCase:
    ids = ["x1-111-mod5", "x2-111-mod5", "x3-111-mod5", "x4-111-mod5"]
    shifts = [Fraction(-3, 40), Fraction(13, 40), Fraction(1, 20), Fraction(9, 20)]
    X = tuple(_shifted(s, product_recipe(i)) for i, s in zip(ids, shifts))
    T = AlgebraicMatrix.diag([_zeta(40, -3), _zeta(40, 13), _zeta(20, 1), _zeta(20, 9)])
    A = matrix_A(5)
    r2 = _sqrt(2)
    M = AlgebraicMatrix.blocks([[A * r2, None], [None, A * r2.inverse()]])
    Nm = AlgebraicMatrix.blocks([[None, A], [A, None]])
    P = AlgebraicMatrix.diag([_zeta(80, 3), _zeta(80, -13), _zeta(80, 3), _zeta(80, -13)])
    comp = Rule("composite", "composite", (M @ P @ Nm) * Fraction(4, 5), 2,
                display="X(tau/(2tau+1)) = 4/5 M P N X(tau)")
    eta1 = (Eta(Fraction(1)), -1)
    g = _theta_vec("g", [1, 3], 5, Fraction(1, 2))
    Y = tuple(Product([Weber("f"), eta1, t]) for t in g) + tuple(Product([Weber("f1"), eta1, t]) for t in g)
    S = Rule("S", "S", AlgebraicMatrix.blocks([[A, None], [None, A * r2.inverse()]]) * (_sqrt(5).inverse() * 2), 2,
             right=Y, source="derived",
             right_labels=("f g[1,5](t/2)/eta", "f g[3,5](t/2)/eta", "f1 g[1,5](t/2)/eta", "f1 g[3,5](t/2)/eta"),
             display="X(-1/(2tau)) = 2/sqrt5 diag(A, A/sqrt2) Y(tau)")
    return _case("x-111-mod5", "X-111-mod5-S", 2, X, ids, T, [S, comp],
                 note="component order follows the x-index of the sums")


def _mod20() -> TransformCase:
    X = (_shifted(Fraction(-1, 40), product_recipe("x1-mod20")),
         _shifted(Fraction(31, 40), product_recipe("x2-mod20")))
    T = AlgebraicMatrix.diag([_zeta(40, -1), _zeta(40, 31)])
    s1, s2 = sin_pi(1, 5), sin_pi(2, 5)
    Sm = AlgebraicMatrix([[s2, s1], [s1, -s2]])
    comp = Rule("composite", "composite", (Sm @ AlgebraicMatrix.diag([_zeta(10), _zeta(10, -1)]) @ Sm) * Fraction(4, 5), 4,
                display="X(tau/(4tau+1)) = 4/5 (sin) diag(z10, z10^-1) (sin) X(tau)")
    Y = _times([Weber("f1", Fraction(4)), (Eta(Fraction(1)), -1)], _theta_vec("g", [1, 3], 5, Fraction(1, 2)))
    S = Rule("S", "S", matrix_A(5) * _sqrt(Fraction(2, 5)), 4, right=Y, source="derived",
             right_labels=("f1(4t) g[1,5](t/2)/eta", "f1(4t) g[3,5](t/2)/eta"),
             display="X(-1/(4tau)) = sqrt(2/5) A f1(4tau) G(tau/2)/eta(tau)")
    return _case("x-mod20", "X-122-mod20-S", 4, X, ["x1-mod20", "x2-mod20"], T, [S, comp])


def _mod5_rank3() -> TransformCase:
    ids = ["x1-mod5-rank3", "x2-mod5-rank3", "x3-mod5-rank3"]
    shifts = [Fraction(-1, 30), Fraction(11, 30), Fraction(1, 6)]
    X = tuple(_shifted(s, product_recipe(i)) for i, s in zip(ids, shifts))
    T = AlgebraicMatrix.diag([_zeta(30, -1), _zeta(30, 11), _zeta(6)])
    s1, s2 = sin_pi(1, 5), sin_pi(2, 5)
    P = AlgebraicMatrix([[s2 * s2, s1 * s1, s1 * s2 * 2], [s1 * s1, s2 * s2, -(s1 * s2 * 2)],
                         [s1 * s2, -(s1 * s2), s1 * s1 - s2 * s2]]) * Fraction(4, 5)
    return _case("x-mod5-rank3", "X-mod5-S", 1, X, ids, T,
                 [Rule("S", "S", P, 1, display="X(-1/tau) = 4/5 (sin^2 ...) X(tau)")])


def _b4k(k: int) -> TransformCase:
    ls = list(range(1, k + 1))
    shifts = [Fraction((2 * l - 1) ** 2, 8 * k) - Fraction(1, 8) for l in ls]
    X = tuple(_shifted(s, product_recipe("B-ori", k, k + 1 - l)) for l, s in zip(ls, shifts))
    T = _tdiag(shifts)
    S = Rule("S", "S", matrix_A(2 * k) * _sqrt(Fraction(2, k)), 4,
             display="X(-1/(4tau)) = sqrt(2/k) A X(tau)")
    return _case(f"B-4k-k{k}", "B-4k", 4, X, [f"x[{2 * k},{k + 1 - l}]" for l in ls], T, [S])


def _hjwz(k: int) -> TransformCase:
    K = 2 * k - 1
    ls = list(range(0, k))
    shifts = [Fraction(l * l, K) for l in ls]
    X = tuple(_shifted(s, product_recipe("HJWZ", k, k - l)) for l, s in zip(ls, shifts))
    T = _tdiag(shifts)
    Y = _times([Eta(Fraction(2)), (Eta(Fraction(4)), -2)], _theta_vec("h", _odd_upto(K), K))
    S = Rule("S", "S", matrix_B(K) * _sqrt(K).inverse(), 4, right=Y, source="derived",
             right_labels=tuple(f"eta(2t) h[{j},{K}]/eta(4t)^2" for j in _odd_upto(K)),
             display="X(-1/(4tau)) = 1/sqrt(2k-1) B eta(2tau) H1(tau)/eta(4tau)^2")
    core = matrix_B(K) @ matrix_Lambda_tilde(K) @ matrix_C(K)
    shown = Rule("composite-as-printed", "composite", core * (cyclo_embed(1, 4) * Fraction(2, K)), 4,
                 expect="fail", display="printed scalar 2/(2k-1)")
    fixed = Rule("composite", "composite", core * (cyclo_embed(1, 4) * Fraction(4, K)), 4, source="corrected",
                 display="X(tau/(4tau+1)) = 4/(2k-1) e^(pi i/2) B Lambda~ C X(tau)")
    return _case(f"HJWZ-k{k}", "HJWZ", 4, X, [f"x[{K},{k - l}]" for l in ls], T, [S, fixed, shown],
                 note="printed scalar 2/(2k-1) of the composite rule is off by 2; 4/(2k-1) verified")


def _eta_prefix(pairs):
    return [(Eta(Fraction(m)), e) for m, e in pairs]


def _x22() -> TransformCase:
    X = (_shifted(Fraction(-5, 48), product_recipe("x1-22")), _shifted(Fraction(19, 48), product_recipe("x2-22")))
    T = AlgebraicMatrix.diag([_zeta(48, -5), _zeta(48, 19)])
    P = AlgebraicMatrix([[sin_pi(3, 8), sin_pi(1, 8)], [sin_pi(1, 8), -sin_pi(3, 8)]])
    return _case("x-22", "eg3-2", 4, X, ["x1-22", "x2-22"], T,
                 [Rule("S", "S", P, 4, display="X(-1/(4tau)) = (sin 3pi/8 ...) X(tau)")])


def _x24() -> TransformCase:
    X = (_shifted(Fraction(-1, 6), product_recipe("x1-24")), _shifted(Fraction(1, 6), product_recipe("x2-24")))
    T = AlgebraicMatrix.diag([_zeta(6, -1), _zeta(6, 1)])
    z12, i_ = _zeta(12), cyclo_embed(1, 4)
    M = AlgebraicMatrix([[i_, z12 * 2], [z12, -z12.inverse()]]) * (-_sqrt(3) * Fraction(1, 3) * _zeta(12, -7))
    comp = Rule("composite", "composite", M, 4,
                display="X(tau/(4tau+1)) = -sqrt3/3 z12^-7 (i 2z12; z12 -z12^-1) X(tau)")
    Y = _times(_eta_prefix([(2, 3), (1, -2), (4, -2)]), _theta_vec("h", [1, 3], 3))
    S = Rule("S", "S", matrix_B(3) * (_sqrt(3).inverse() * 2), 4, right=Y, source="derived",
             right_labels=("E h[1,3]", "E h[3,3]"),
             display="X(-1/(4tau)) = 2/sqrt3 B eta^3(2t)/(eta^2(t) eta^2(4t)) H1(tau)")
    return _case("x-24", "X-24-S", 4, X, ["x1-24", "x2-24"], T, [S, comp],
                 note="composite matrix stored as displayed; no derivation is given for it")


def _x222(which: int) -> TransformCase:
    if which == 1:
        ids, shifts = ["x1-222", "x2-222"], [Fraction(1, 24), Fraction(3, 8)]
        T = AlgebraicMatrix.diag([_zeta(24), _zeta(8, 3)])
        pre = _eta_prefix([(1, 1), (2, -1), (4, -1)])
        c = _sqrt(3).inverse()
    else:
        ids, shifts = ["x3-222", "x4-222"], [Fraction(-1, 12), Fraction(1, 4)]
        T = AlgebraicMatrix.diag([_zeta(12, -1), _zeta(4)])
        pre = _eta_prefix([(2, 2), (4, -2), (1, -1)])
        c = _sqrt(Fraction(2, 3))
    X = tuple(_shifted(s, product_recipe(i)) for i, s in zip(ids, shifts))
    z8, z24 = _zeta(8), _zeta(24, 11)
    M = AlgebraicMatrix([[z8 * 2 + z24, z8 * 2 - z24 * 2], [z8 - z24, z8 + z24 * 2]]) * Fraction(1, 3)
    comp = Rule("composite", "composite", M, 4, display="X(tau/(4tau+1)) = 1/3 (2z8+z24^11 ...) X(tau)")
    Y = _times(pre, _theta_vec("h", [1, 3], 3))
    S = Rule("S", "S", matrix_B(3) * c, 4, right=Y, source="derived",
             right_labels=("E h[1,3]", "E h[3,3]"), display="X(-1/(4tau)) = c B E(tau) H1(tau)")
    return _case(f"x-222-X{which}", "x1-222", 4, X, ids, T, [S, comp])


def _mod12() -> TransformCase:
    ids = ["x1-mod12-222", "x2-mod12-222", "x3-mod12-222"]
    shifts = [Fraction(-1, 8), Fraction(5, 24), Fraction(7, 8)]
    X = tuple(_shifted(s, product_recipe(i)) for i, s in zip(ids, shifts))
    T = AlgebraicMatrix.diag([_zeta(8, -1), _zeta(24, 5), _zeta(8, 7)])
    a, b, c = sin_pi(5, 12), sin_pi(1, 4), sin_pi(1, 12)
    P = AlgebraicMatrix([[a, b, c], [b, -b, -b], [c, -b, a]]) * _sqrt(Fraction(2, 3))
    return _case("x-mod12-222", "x1-mod12-222", 4, X, ids, T,
                 [Rule("S", "S", P, 4, display="X(-1/(4tau)) = sqrt(2/3) (sin ...) X(tau)")])


def _mod8() -> TransformCase:
    X = (_shifted(Fraction(-1, 48), product_recipe("x1-mod8-112")),
         _shifted(Fraction(23, 48), product_recipe("x2-mod8-112")))
    T = AlgebraicMatrix.diag([_zeta(48, -1), _zeta(48, 23)])
    M = AlgebraicMatrix([[1, 1], [1, -1]]) * (_sqrt(2) * Fraction(1, 2) * _zeta(48, 7))
    comp = Rule("composite", "composite", M, 4, display="X(tau/(4tau+1)) = sqrt2/2 z48^7 (1 1; 1 -1) X(tau)")
    Y = _times(_eta_prefix([(2, 2), (4, -2), (1, -1)]), _theta_vec("g", [1, 3], 4))
    S = Rule("S", "S", matrix_A(4) * _sqrt(2).inverse(), 4, right=Y, source="derived",
             right_labels=("E g[1,4]", "E g[3,4]"),
             display="X(-1/(4tau)) = 1/sqrt2 A eta^2(2t)/(eta^2(4t) eta(t)) G(tau)")
    return _case("x-mod8-112", "x1-mod8-112", 4, X, ["x1-mod8-112", "x2-mod8-112"], T, [S, comp])


def _x48() -> TransformCase:
    X = (_shifted(Fraction(1, 15), product_recipe("x1-48")), _shifted(Fraction(4, 15), product_recipe("x2-48")))
    T = AlgebraicMatrix.diag([_zeta(15), _zeta(15, 4)])
    A = matrix_A(5)
    P1 = AlgebraicMatrix.diag([_zeta(120, 11), _zeta(120, -181)])
    P2 = AlgebraicMatrix.diag([_zeta(240, 11), _zeta(240, -181)])
    g_half = _theta_vec("g", [1, 3], 5, Fraction(1, 2))
    comp8 = Rule("composite", "composite", (A @ P1 @ A) * Fraction(4, 5), 8,
                 display="X(tau/(8tau+1)) = 4/5 A P1 A X(tau)")
    f_version = _times([Weber("f", Fraction(4))] + _eta_prefix([(2, 1), (1, -1), (4, -1)]), g_half)
    comp4 = Rule("composite-f", "composite", (A @ P2 @ A) * (_sqrt(2) * Fraction(4, 5)), 4, right=f_version,
                 right_labels=("f(4t) eta(2t) g[1,5](t/2)/(eta eta(4t))", "f(4t) eta(2t) g[3,5](t/2)/(eta eta(4t))"),
                 display="X(tau/(4tau+1)) = 4 sqrt2/5 A P2 A f(4tau) eta(2tau) G(tau/2)/(eta(tau) eta(4tau))")
    gamma0_4 = Rule("gamma0(4)-candidate", "composite", (A @ P2 @ A) * (_sqrt(2) * Fraction(4, 5)), 4,
                    expect="fail", display="the same matrix applied to X itself")
    Y = _times([Weber("f1", Fraction(2))] + _eta_prefix([(4, 1), (8, -1), (2, -1)]), _theta_vec("g", [1, 3], 5, 4))
    S = Rule("S", "S", A * (_sqrt(5).inverse() * 4), 8, right=Y, source="derived",
             right_labels=("f1(2t) eta(4t) g[1,5](4t)/(eta(8t) eta(2t))", "f1(2t) eta(4t) g[3,5](4t)/(eta(8t) eta(2t))"),
             display="X(-1/(8tau)) = 4/sqrt5 A f1(2tau) eta(4tau) G(4tau)/(eta(8tau) eta(2tau))")
    return _case("x48", "X-48-mod5-S", 8, X, ["x1-48", "x2-48"], T, [S, comp8, comp4, gamma0_4],
                 status="modular on the group generated by T and (1 0; 8 1), not on Gamma0(4)")


@lru_cache(maxsize=1)
def _registry() -> dict[str, TransformCase]:
    cases = [_rr(), _kr(), _capparelli()]
    cases += [_g_odd(k) for k in range(2, 8)]
    cases += [_g_even(k) for k in range(2, 8)]
    cases += [_ag(k) for k in range(2, 6)]
    cases += [_bressoud(k, p) for k in range(2, 6) for p in (0, 1)]
    cases += [_ag_ge(k) for k in (1, 2, 3)]
    cases += [_eta_hat(k) for k in (1, 2, 3)]
    cases += [_x111(), _mod20(), _mod5_rank3()]
    cases += [_b4k(k) for k in (2, 3, 4)]
    cases += [_hjwz(k) for k in (2, 3, 4)]
    cases += [_x22(), _x24(), _x222(1), _x222(2), _mod12(), _mod8(), _x48()]
    return {c.name: c for c in cases}


def registry_transform_cases() -> list[TransformCase]:
    return list(_registry().values())


def get_transform_case(name: str) -> TransformCase:
    try:
        return _registry()[name]
    except KeyError:
        raise KeyError(f"unknown transform case {name!r}") from None


def transform_catalog_json() -> str:
    return json.dumps({"schema": 1, "transforms": [c.summary() for c in registry_transform_cases()]},
                      indent=2, sort_keys=True)
