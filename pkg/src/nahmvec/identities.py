"""Catalog of exact sum = product and product = product identities.

Every case pairs two series recipes (callables ``T -> PuiseuxSeries``) and
is checked by exact coefficient comparison below a truncation order.  The
product recipes for the Nahm-sum families live here as ``Product`` objects
so that the transformation registry can reuse them for numeric evaluation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cyclo import cyclo_embed
from .nahm import (
    andrews_gordon_sum,
    bressoud_sum,
    capparelli_sum,
    example_sum,
    kanade_russell_sum,
    nahm_sum,
    NahmQuadruple,
)
from .products import (
    Const,
    Poch,
    Product,
    crank_gf,
    eta_quotient,
    theta_g,
    theta_h,
    _theta_product,
)
from .series import (
    Mismatch,
    PuiseuxSeries,
    add,
    compare_to_order,
)

__all__ = [
    "IdentityCase",
    "IdentityResult",
    "product_recipe",
    "registry",
    "get_identity",
    "check_identity",
    "check_eta_dissections",
    "list_identities",
    "catalog_json",
    "UnknownIdentity",
]


class UnknownIdentity(KeyError):
    pass


# ---------------------------------------------------------------------------
# product recipes


def _J(m, p=1):
    return (Poch(m, m), p)


def _Jam(a, m, p=1):
    return [(Poch(a, m), p), (Poch(m - a, m), p), (Poch(m, m), p)]


def _neg(a, m):
    return Poch(a, m, -1)


def _inv(a, m):
    return (Poch(a, m), -1)


_FIXED_PRODUCTS = {
    "x1-111-mod5": [_neg(1, 2), _inv(2, 10), _inv(8, 10)],
    "x2-111-mod5": [_neg(1, 2), _inv(4, 10), _inv(6, 10)],
    "x3-111-mod5": [_neg(2, 2), _inv(2, 10), _inv(8, 10)],
    "x4-111-mod5": [_neg(2, 2), _inv(4, 10), _inv(6, 10)],
    "x1-mod20": [_neg(1, 1), _inv(4, 20), _inv(16, 20)],
    "x2-mod20": [_neg(1, 1), _inv(8, 20), _inv(12, 20)],
    "x1-mod5-rank3": [(Poch(1, 5), -2), (Poch(4, 5), -2)],
    "x2-mod5-rank3": [(Poch(2, 5), -2), (Poch(3, 5), -2)],
    "x3-mod5-rank3": [_J(5), _J(1, -1)],
    "x1-22": [_J(2, 3), _J(1, -2), _J(4, -2)] + _Jam(3, 8),
    "x2-22": [_J(2, 3), _J(1, -2), _J(4, -2)] + _Jam(1, 8),
    "x1-24": [_J(2, 3), _J(3, 2), _J(1, -2), _J(4, -2), _J(6, -1)],
    "x2-24": [_J(2, 2), _J(6, 2), _J(1, -1), _J(3, -1), _J(4, -2)],
    "x1-222": [_J(3, 2), _J(4), _J(1, -1), _J(2, -1), _J(6, -1)],
    "x2-222": [_J(4), _J(6, 2), _J(2, -2), _J(3, -1)],
    "x3-222": [_J(2, 2), _J(3, 2), _J(1, -2), _J(4, -1), _J(6, -1)],
    "x4-222": [_J(2), _J(6, 2), _J(1, -1), _J(3, -1), _J(4, -1)],
    "x1-mod12-222": [_J(2, 3), _J(1, -2), _J(4, -2)] + _Jam(5, 12),
    "x2-mod12-222": [_J(2, 3), _J(1, -2), _J(4, -2)] + _Jam(3, 12),
    "x3-mod12-222": [_J(2, 3), _J(1, -2), _J(4, -2)] + _Jam(1, 12),
    "x1-mod8-112": [_neg(1, 1), _inv(1, 8), _inv(4, 8), _inv(7, 8)],
    "x2-mod8-112": [_neg(1, 1), _inv(3, 8), _inv(4, 8), _inv(5, 8)],
    "x1-48": [Const(2), _neg(4, 4)] + _Jam(2, 5) + [_inv(1, 4), _inv(3, 4), _inv(4, 4)],
    "x2-48": [Const(2), _neg(4, 4)] + _Jam(1, 5) + [_inv(1, 4), _inv(3, 4), _inv(4, 4)],
}

_KR_RESIDUES = {1: (1, 3, 6, 8), 2: (2, 3, 6, 7), 3: (3, 4, 5, 6)}


def product_recipe(family: str, k: int | None = None, i: int | None = None) -> Product:
    """Infinite-product side of a named sum family.

    Families: ``RR`` (i = 1 for G, 2 for H), ``AG`` (modulus 2k+1),
    ``Bressoud`` (modulus 2k), ``Capparelli`` (i = 1, 2), ``KR`` (i = 1..3),
    ``B-ori``, ``HJWZ``, ``AG-ge-2k+3``, ``eta-hat-2k+3`` and every fixed
    application id such as ``x1-22``.
    """
    if family == "RR":
        a = {1: (1, 4), 2: (2, 3)}[i]
        return Product([_inv(a[0], 5), _inv(a[1], 5)])
    if family == "AG":
        _need(k, i, 2, k)
        return Product(_Jam(i, 2 * k + 1) + [_J(1, -1)])
    if family == "Bressoud":
        _need(k, i, 2, k)
        return Product(_Jam(i, 2 * k) + [_J(1, -1)])
    if family == "Capparelli":
        res = {1: (2, 3, 4, 6), 2: (1, 3, 5, 6)}[i]
        return Product([_neg(a, 6) for a in res])
    if family == "KR":
        return Product([_inv(a, 9) for a in _KR_RESIDUES[i]])
    if family == "B-ori":
        _need(k, i, 2, k)
        return Product([Poch(2, 4)] + _Jam(2 * i - 1, 4 * k) + [_J(1, -1)])
    if family == "HJWZ":
        _need(k, i, 2, k)
        return Product([_neg(1, 1)] + _Jam(2 * i - 1, 4 * k - 2) + [_J(1, -1)])
    if family == "AG-ge-2k+3":
        _need(k, i, 1, k + 1)
        return Product([_neg(1, 2)] + _Jam(i, 2 * k + 3) + [_J(2, -1)])
    if family == "eta-hat-2k+3":
        _need(k, i, 1, k + 1)
        return Product(_Jam(4 * i, 8 * k + 12) + [_J(1, -1)])
    if family in _FIXED_PRODUCTS:
        return Product(_FIXED_PRODUCTS[family])
    raise UnknownIdentity(f"unknown product family {family!r}")


def _need(k, i, kmin, imax):
    if k is None or i is None or k < kmin or not 1 <= i <= imax:
        raise ValueError(f"parameters k={k}, i={i} out of range")


# ---------------------------------------------------------------------------
# cases


@dataclass(frozen=True)
class IdentityCase:
    name: str
    left: Callable[[object], PuiseuxSeries]
    right: Callable[[object], PuiseuxSeries]
    default_order: int
    anchor: str
    status: str = "proved"
    ring: int = 1
    tags: frozenset = field(default_factory=frozenset)
    note: str = ""

    def summary(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "default_order": self.default_order,
            "ring": "Q" if self.ring == 1 else f"Q(zeta_{self.ring})",
            "tags": sorted(self.tags),
        }


@dataclass
class IdentityResult:
    name: str
    anchor: str
    status: str
    order: int
    mismatch: Mismatch | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    @property
    def verdict(self) -> str:
        if not self.ok:
            return "MISMATCH"
        return "consistent to order" if self.status == "conjectural" else "verified"

    def to_dict(self) -> dict:
        d = {"name": self.name, "anchor": self.anchor, "status": self.status,
             "order": self.order, "verdict": self.verdict}
        if self.mismatch is not None:
            m = self.mismatch
            d["mismatch"] = {"exponent": str(m.exponent), "left": _coeff_str(m.left),
                             "right": _coeff_str(m.right)}
        return d


def _coeff_str(c) -> str:
    if hasattr(c, "poly_string"):
        return c.poly_string("z")
    return str(c)


def _prod(recipe: Product, shift=0):
    def build(T):
        s = recipe.expand(T - shift) if shift else recipe.expand(T)
        return s.shift(shift) if shift else s
    return build


def _crank_right(z):
    """Three-term dissection of the crank generating function."""
    def ratio(a, b):
        return Product([Poch(a, 27), Poch(27 - a, 27), Poch(b, 27), Poch(27 - b, 27), (Poch(27, 27), 1)])

    c1 = -(1 - z + z ** 2 + z ** 5)
    c2 = z ** 2 - z - z ** 4

    def build(T):
        t0 = ratio(6, 12).expand(T).to_ring(9)
        t1 = (ratio(3, 12) * Product([Const(c1)])).expand(T - 1).shift(1)
        t2 = (ratio(3, 6) * Product([Const(c2)])).expand(T - 2).shift(2)
        return add(add(t0, t1.to_ring(9)), t2.to_ring(9))

    return build


def _eta_sum(first, second, sign):
    def build(T):
        a = first.expand(T)
        b = second.expand(T)
        return a + b if sign > 0 else a - b
    return build


def _j_quot(num, den):
    return Product([_J(m) for m in num] + [_J(m, -1) for m in den])


def _two_dissection(even: Product, odd: Product, sign: int):
    def build(T):
        e = even.expand(T)
        o = odd.expand(T - 1).shift(1)
        return e + o if sign > 0 else e - o
    return build


def _theta_case(kind, j, m):
    fn = theta_g if kind == "g" else theta_h

    def left(T):
        return fn(j, m, T, check=False)

    def right(T):
        return _theta_product(kind, Fraction(j), Fraction(m), T)

    return left, right


def _build_registry() -> dict[str, IdentityCase]:
    cases: list[IdentityCase] = []

    def add_case(*args, **kw):
        cases.append(IdentityCase(*args, **kw))

    rr = {1: NahmQuadruple([[2]], [0], 0), 2: NahmQuadruple([[2]], [1], 0)}
    for n in (1, 2):
        add_case(f"RR{n}", lambda T, q=rr[n]: nahm_sum(q, T), _prod(product_recipe("RR", i=n)),
                 200, f"R-R-{n}", tags=frozenset({"rank-1"}))

    for k in range(2, 6):
        for i in range(1, k + 1):
            add_case(f"AG-k{k}-i{i}", lambda T, k=k, i=i: andrews_gordon_sum(k, i, T),
                     _prod(product_recipe("AG", k, i)), 100, "eq-AG",
                     tags=frozenset({"andrews-gordon", f"rank-{k - 1}"}))
    for k in range(2, 6):
        for i in range(1, k + 1):
            add_case(f"Bressoud-k{k}-i{i}", lambda T, k=k, i=i: bressoud_sum(k, i, T),
                     _prod(product_recipe("Bressoud", k, i)), 100, "B-identity",
                     tags=frozenset({"bressoud", f"rank-{k - 1}"}))

    for n in (1, 2):
        add_case(f"Capparelli-{n}", lambda T, n=n: capparelli_sum(n, T),
                 _prod(product_recipe("Capparelli", i=n)), 100, f"eq-Capparelli-{n}",
                 tags=frozenset({"rank-2"}))
    cap_eta = {
        1: eta_quotient([(4, 1), (6, 2), (2, -1), (3, -1), (12, -1)]),
        2: eta_quotient([(2, 2), (12, 1), (1, -1), (4, -1), (6, -1)]),
    }
    shifts = {1: Fraction(-1, 24), 2: Fraction(5, 24)}
    for n in (1, 2):
        add_case(f"Capparelli-eta-{n}", _prod(cap_eta[n]),
                 lambda T, n=n: capparelli_sum(n, T - shifts[n]).shift(shifts[n]),
                 100, f"eq-Capparelli-{n}", tags=frozenset({"eta-quotient"}),
                 note="component written as an eta quotient")

    for n in (1, 2, 3):
        add_case(f"KR-b{n}", lambda T, n=n: kanade_russell_sum(n, T),
                 _prod(product_recipe("KR", i=n)), 100, f"KR-a{n}", status="conjectural",
                 tags=frozenset({"rank-2", "conjectural"}),
                 note="open conjecture; a finite check is only consistency to the stated order")

    for j in (1, 2, 4):
        z = cyclo_embed(j, 9)
        label = "zeta9" if j == 1 else f"zeta9^{j}"
        add_case(f"crank-3dissect-z={label}", lambda T, z=z: crank_gf(z, T), _crank_right(z),
                 60, "F-3-dissection", ring=9, tags=frozenset({"cyclotomic", "dissection"}))

    j1 = _two_dissection(_j_quot([4, 6, 16, 24, 24], [2, 2, 8, 12, 48]),
                         _j_quot([4, 6, 8, 8, 48], [2, 2, 4, 16, 24]), +1)
    j2 = _two_dissection(_j_quot([2, 12, 16, 24, 24], [6, 6, 8, 12, 48]),
                         _j_quot([2, 12, 8, 8, 48], [4, 6, 6, 16, 24]), -1)
    add_case("J-id-1", _prod(_j_quot([3], [1])), j1, 200, "J-id-1",
             tags=frozenset({"dissection", "eta-quotient"}))
    add_case("J-id-2", _prod(_j_quot([1], [3])), j2, 200, "J-id-2",
             tags=frozenset({"dissection", "eta-quotient"}))

    F = Fraction
    id1_left = eta_quotient([(F(1, 4), 1), (F(1, 6), 2), (F(1, 2), -1), (F(1, 3), -1), (F(1, 12), -1)])
    id2_left = eta_quotient([(F(1, 2), 2), (F(1, 12), 1), (1, -1), (F(1, 4), -1), (F(1, 6), -1)])
    t_a = eta_quotient([(F(4, 3), 1), (2, 2), (F(2, 3), -1), (1, -1), (4, -1)])
    t_b = eta_quotient([(F(2, 3), 2), (4, 1), (F(1, 3), -1), (F(4, 3), -1), (2, -1)])
    add_case("id-1", _prod(id1_left), _eta_sum(t_a, t_b, +1), 40, "id-1",
             tags=frozenset({"eta-quotient"}))
    add_case("id-2", _prod(id2_left), _eta_sum(t_a, t_b, -1), 40, "id-2",
             tags=frozenset({"eta-quotient"}))

    # Jacobi triple product specializations
    add_case("JTP-zq2", lambda T: theta_h(0, 1, T, check=False),
             _prod(Product([_neg(1, 2), _neg(1, 2), _J(2)])), 200, "JTP",
             tags=frozenset({"theta"}), note="base q^2 with z = -q: sum of q^(n^2)")
    add_case("JTP-zq", lambda T: theta_g(0, Fraction(1, 2), T, check=False),
             _prod(Product([Poch(Fraction(1, 2), 1), Poch(Fraction(1, 2), 1), _J(1)])), 200, "JTP",
             tags=frozenset({"theta"}), note="base q with z = q^(1/2): alternating sum of q^(n^2/2)")
    for kind, j, m in (("g", 1, 5), ("g", 3, 5), ("h", 1, 3), ("g", F(1, 2), F(5, 2)), ("h", 0, 4)):
        left, right = _theta_case(kind, j, m)
        add_case(f"theta-{kind}[{j},{m}]", left, right, 200, "g-defn" if kind == "g" else "hg",
                 tags=frozenset({"theta"}))

    for k in (2, 3, 4):
        for i in range(1, k + 1):
            add_case(f"B-ori-k{k}-i{i}", lambda T, k=k, i=i: example_sum("B-ori", T, k, i),
                     _prod(product_recipe("B-ori", k, i)), 40, "B-ori",
                     tags=frozenset({"application", "nested"}))
            add_case(f"HJWZ-k{k}-i{i}", lambda T, k=k, i=i: example_sum("HJWZ", T, k, i),
                     _prod(product_recipe("HJWZ", k, i)), 40, "HJWZ",
                     tags=frozenset({"application", "nested"}),
                     note="(a;q)_{-1} = 1/(1 - a/q) at n1 = 0; n_k read as 0 when i = k")
    for k in (2, 3):
        for i in range(1, k + 2):
            add_case(f"AG-ge-k{k}-i{i}", lambda T, k=k, i=i: example_sum("AG-ge-2k+3", T, k, i),
                     _prod(product_recipe("AG-ge-2k+3", k, i)), 60 if k == 2 else 40, "AG-ge-2k+3",
                     tags=frozenset({"application", f"rank-{k}"}),
                     note="exponent pattern read as every second N_j from j = i")
    for k in (1, 2, 3):
        for i in range(1, k + 2):
            add_case(f"eta-hat-k{k}-i{i}", lambda T, k=k, i=i: example_sum("eta-hat-2k+3", T, k, i),
                     _prod(product_recipe("eta-hat-2k+3", k, i)), 40, "eta-hat-2k+3",
                     tags=frozenset({"application", f"rank-{k + 2}"}))
    rank2 = {"x1-22", "x2-22", "x1-24", "x2-24", "x1-48", "x2-48"}
    for sid in _FIXED_PRODUCTS:
        add_case(sid, lambda T, sid=sid: example_sum(sid, T), _prod(product_recipe(sid)),
                 60 if sid in rank2 else 40, sid,
                 tags=frozenset({"application", "rank-2" if sid in rank2 else "rank-3"}))
    return {c.name: c for c in cases}


_REGISTRY: dict[str, IdentityCase] | None = None


def registry() -> dict[str, IdentityCase]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


def get_identity(name: str) -> IdentityCase:
    try:
        return registry()[name]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {name!r}") from None


def check_identity(name: str, T: int | None = None, max_order: int = 2000) -> IdentityResult:
    """Exact comparison of both sides below q^T."""
    case = get_identity(name)
    T = case.default_order if T is None else int(T)
    if T > max_order:
        raise ValueError(f"order {T} exceeds the configured maximum {max_order}")
    left, right = case.left(T), case.right(T)
    if left.ring != right.ring:
        n = max(left.ring, right.ring)
        left, right = left.to_ring(n), right.to_ring(n)
    return IdentityResult(case.name, case.anchor, case.status, T, compare_to_order(left, right, T))


def check_eta_dissections(T: int = 200) -> dict[str, bool]:
    """2-dissections of J3/J1 and J1/J3, plus a parity-extraction cross-check.

    The parity check splits the left side by exponent parity and compares
    each half with the displayed even summand and odd summand separately.
    """
    report: dict[str, bool] = {}
    for name, num, den, even, odd, sign in (
        ("J-id-1", [3], [1], _j_quot([4, 6, 16, 24, 24], [2, 2, 8, 12, 48]),
         _j_quot([4, 6, 8, 8, 48], [2, 2, 4, 16, 24]), 1),
        ("J-id-2", [1], [3], _j_quot([2, 12, 16, 24, 24], [6, 6, 8, 12, 48]),
         _j_quot([2, 12, 8, 8, 48], [4, 6, 6, 16, 24]), -1),
    ):
        report[name] = check_identity(name, T).ok
        left = _j_quot(num, den).expand(T)
        ev = even.expand(T)
        od = odd.expand(T - 1).shift(1)
        if sign < 0:
            od = -od
        report[f"{name}:even-part"] = compare_to_order(left.residue_part(2, 0), ev, T) is None
        report[f"{name}:odd-part"] = compare_to_order(left.residue_part(2, 1), od, T) is None
        # the displayed summands must themselves live on a single parity class
        report[f"{name}:parity-classes"] = (all(e.denominator == 1 and e % 2 == 0 for e, _ in ev.items())
                                            and all(e.denominator == 1 and e % 2 == 1 for e, _ in od.items()))
    return report


def list_identities(filter: str = "") -> list[dict]:
    """Catalog rows; the filter matches a status, a tag or a name substring."""
    rows = []
    for case in registry().values():
        if filter and not (filter == case.status or filter in case.tags or filter in case.name):
            continue
        rows.append(case.summary())
    return rows


def catalog_json(filter: str = "") -> str:
    return json.dumps({"schema": 1, "identities": list_identities(filter)}, indent=2, sort_keys=True)
