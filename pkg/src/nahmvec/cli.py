"""Command-line entry point: ``nahmvec expand|check|transform|lemmas|list``."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import identities, nahm, numeric, transforms
from .series import PuiseuxSeries

MAX_ORDER = 2000
SCHEMA = 1


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expand


def _params(tokens: list[str]) -> dict:
    out = {}
    for t in tokens:
        if "=" not in t:
            raise UsageError(f"expected key=value, got {t!r}")
        key, value = t.split("=", 1)
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {value!r}") from None
    return out


def _series_from_family(text: str, T) -> PuiseuxSeries:
    """``AG k=2 i=2``, ``Bressoud k=3 i=1``, ``RR 1``, ``Capparelli 2``, ``KR b1``, ``x1-22``, ``HJWZ k=2 i=1``."""
    tokens = text.split()
    if not tokens:
        raise UsageError("empty family name")
    fam, rest = tokens[0], tokens[1:]
    if fam in ("RR", "Capparelli", "KR"):
        if len(rest) != 1:
            raise UsageError(f"{fam} takes one selector, e.g. '{fam} 1'")
        sel = rest[0].lstrip("b")
        if not sel.isdigit():
            raise UsageError(f"bad selector {rest[0]!r}")
        n = int(sel)
        if fam == "RR":
            if n not in (1, 2):
                raise UsageError("RR selector is 1 or 2")
            return nahm.nahm_sum(nahm.NahmQuadruple([[2]], [n - 1], 0), T)
        if fam == "Capparelli":
            return nahm.capparelli_sum(n, T)
        return nahm.kanade_russell_sum(n, T)
    p = _params(rest)
    if fam == "AG":
        return nahm.andrews_gordon_sum(p["k"], p["i"], T)
    if fam == "Bressoud":
        return nahm.bressoud_sum(p["k"], p["i"], T)
    if fam in nahm.EXAMPLE_IDS:
        return nahm.example_sum(fam, T, p.get("k"), p.get("i"))
    raise UsageError(f"unknown family {fam!r}")


def _coeff_text(c) -> str:
    if hasattr(c, "poly_string"):
        return c.poly_string("z")
    return str(c)


def series_listing(s: PuiseuxSeries) -> list[tuple[str, str]]:
    return [(str(e), _coeff_text(c)) for e, c in s.items()]


def cmd_expand(args) -> tuple[dict, bool, dict]:
    T = _order(args.order, default=20)
    path = Path(args.spec)
    if path.suffix == ".json" or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        quad = nahm.quadruple_from_json(text)
        s = nahm.nahm_sum(quad, T)
        source = {"file": str(path)}
    else:
        s = _series_from_family(args.spec, T)
        source = {"family": args.spec}
    body = {
        "schema": SCHEMA,
        "command": "expand",
        "source": source,
        "order": T,
        "ring": "Q" if s.ring == 1 else f"Q(zeta_{s.ring})",
        "terms": [[e, c] for e, c in series_listing(s)],
    }
    return body, True, {}


def _order(value, default=None):
    if value is None:
        return default
    if value < 0:
        raise UsageError("order must be nonnegative")
    if value > MAX_ORDER:
        raise UsageError(f"order {value} exceeds the cap {MAX_ORDER}")
    return value


# ---------------------------------------------------------------------------
# check


def _check_one(job):
    name, order = job
    t = time.perf_counter()
    res = identities.check_identity(name, order, MAX_ORDER)
    return res.to_dict(), time.perf_counter() - t


def _map(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def cmd_check(args) -> tuple[dict, bool, dict]:
    order = _order(args.order)
    names = list(identities.registry()) if args.name == "all" else [args.name]
    for n in names:
        identities.get_identity(n)
    out = _map(_check_one, [(n, order) for n in names], args.jobs)
    results = [r for r, _ in out]
    walls = {r["name"]: round(w, 4) for r, w in out}
    ok = all(r["verdict"] != "MISMATCH" for r in results)
    body = {"schema": SCHEMA, "command": "check", "target": args.name, "results": results}
    if args.name == "all":
        dis = identities.check_eta_dissections()
        cyc = transforms.cyclo_constant_check()
        body["dissection_checks"] = dis
        body["cyclotomic_constants"] = cyc
        ok = ok and all(dis.values()) and all(r["pass"] for r in cyc)
    body["verdict"] = "pass" if ok else "FAIL"
    return body, ok, walls


# ---------------------------------------------------------------------------
# transform and lemmas


def cmd_transform(args) -> tuple[dict, bool, dict]:
    if args.prec < 64:
        raise UsageError("precision below 64 bits is rejected")
    names = [c.name for c in transforms.registry_transform_cases()] if args.name == "all" else [args.name]
    for n in names:
        transforms.get_transform_case(n)
    taus = args.tau or None
    if taus:
        for t in taus:
            numeric.parse_tau(t, args.prec)
    reports = numeric.verify_cases(names, taus, args.prec, args.jobs)
    ok = all(r.ok for r in reports)
    body = {
        "schema": SCHEMA,
        "command": "transform",
        "target": args.name,
        "prec": args.prec,
        "sample_bases": list(taus or numeric.DEFAULT_BASES),
        "thresholds": {"pass_below": numeric.PASS_THRESHOLD, "expected_fail_above": numeric.FAIL_THRESHOLD},
        "results": [r.to_dict() for r in reports],
        "verdict": "pass" if ok else "FAIL",
    }
    return body, ok, {r.case: round(r.wall_time, 4) for r in reports}


def _random_gammas(n: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a, b, c, d = (rng.randint(-6, 6) for _ in range(4))
        N = rng.randint(1, 12)
        g, h = rng.randint(-2 * N, 2 * N), rng.randint(-2 * N, 2 * N)
        if a * d - b * c == 1 and c != 0 and not (g % N == 0 and h % N == 0):
            out.append((N, g, h, (a, b, c, d)))
    return out


def cmd_lemmas(args) -> tuple[dict, bool, dict]:
    if args.prec < 64:
        raise UsageError("precision below 64 bits is rejected")
    taus = [numeric.parse_tau(t, args.prec) for t in (args.tau or numeric.DEFAULT_BASES)]
    rows = []
    for tau in taus:
        for m2 in range(1, 11):
            m = Fraction(m2, 2)
            for j in range(0, m2 + 1):
                for rule, r in numeric.theta_inversion_residuals(j, m, tau, args.prec).items():
                    rows.append({"lemma": "S/T theta", "rule": rule, "j": j, "m": str(m), "residual": r})
        for k in range(2, 8):
            for j in range(0, k + 1):
                rows.append({"lemma": "g(-1/4tau)", "j": j, "k": k,
                             "residual": numeric.g_quarter_residual(j, k, tau, args.prec)})
                rows.append({"lemma": "h(-1/4tau)", "j": j, "k": k,
                             "residual": numeric.h_quarter_residual(j, k, tau, args.prec)})
    tau0 = numeric.parse_tau("1/7+4/5*i", args.prec)
    for N, g, h, gamma in _random_gammas(20, args.seed):
        r = numeric.verify_gen_eta(N, g, h, gamma, tau0, args.prec)
        rows.append({"lemma": "generalized eta", **{k: r[k] for k in ("N", "g", "h", "gamma", "residual")}})
    worst = max(r["residual"] for r in rows)
    ok = worst < numeric.PASS_THRESHOLD
    body = {"schema": SCHEMA, "command": "lemmas", "prec": args.prec, "checks": len(rows),
            "max_residual": worst, "results": rows, "verdict": "pass" if ok else "FAIL"}
    return body, ok, {}


# ---------------------------------------------------------------------------
# list


def cmd_list(args) -> tuple[dict, bool, dict]:
    if args.kind == "identities":
        rows = identities.list_identities(args.filter or "")
    else:
        rows = [c.summary() for c in transforms.registry_transform_cases()
                if not args.filter or args.filter in c.name or args.filter == c.status]
    return {"schema": SCHEMA, "command": "list", "kind": args.kind, "count": len(rows), args.kind: rows}, True, {}


# ---------------------------------------------------------------------------
# text rendering


def _text(body: dict) -> str:
    cmd = body["command"]
    lines = []
    if cmd == "expand":
        lines += [f"{e}: {c}" for e, c in body["terms"]]
    elif cmd == "check":
        for r in body["results"]:
            line = f"{r['name']:<28} {r['verdict']:<20} order {r['order']}  [{r['anchor']}]"
            if "mismatch" in r:
                m = r["mismatch"]
                line += f"  at q^{m['exponent']}: {m['left']} != {m['right']}"
            lines.append(line)
        for k, v in body.get("dissection_checks", {}).items():
            lines.append(f"{k:<28} {'pass' if v else 'FAIL'}")
        for r in body.get("cyclotomic_constants", []):
            lines.append(f"{r['identity']:<40} {'pass' if r['pass'] else 'FAIL'}")
        lines.append(f"verdict: {body['verdict']}")
    elif cmd == "transform":
        for c in body["results"]:
            lines.append(f"{c['case']}  [{c['anchor']}]  {'ok' if c['ok'] else 'NOT OK'}")
            for r in c["rules"]:
                lines.append(f"    {r['rule']:<22} {r['kind']:<10} N={r['N']:<2} {r['source']:<9} "
                             f"{r['verdict']:<16} max residual {r['max_residual']:.2e}")
                for n in r["notes"]:
                    lines.append(f"        {n}")
            for f in c["convergence_flags"]:
                lines.append(f"    convergence: {f}")
        lines.append(f"verdict: {body['verdict']} (prec {body['prec']} bits; "
                     "convergence by heuristic doubling of the truncation)")
    elif cmd == "lemmas":
        lines.append(f"{body['checks']} checks, max residual {body['max_residual']:.2e}")
        lines += [f"    {r['lemma']}: {json.dumps({k: v for k, v in r.items() if k not in ('lemma',)})}"
                  for r in body["results"] if r["residual"] >= numeric.PASS_THRESHOLD]
        lines.append(f"verdict: {body['verdict']}")
    elif cmd == "list":
        for r in body[body["kind"]]:
            extra = r.get("default_order", r.get("dimension", ""))
            lines.append(f"{r['name']:<28} {r['anchor']:<24} {r['status']:<12} {extra}")
        lines.append(f"{body['count']} entries")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nahmvec", description="Exact q-series expansion and modular transformation checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes across cases")
    sub = p.add_subparsers(dest="cmd", required=True)

    e = sub.add_parser("expand", parents=[common], help="expand a named sum or a quadruple JSON file")
    e.add_argument("spec", help="family such as 'AG k=2 i=2' or 'KR b1', or a path to a quadruple .json")
    e.add_argument("--order", type=int, default=None)

    c = sub.add_parser("check", parents=[common], help="exact identity checks")
    c.add_argument("name", nargs="?", default="all")
    c.add_argument("--order", type=int, default=None)

    t = sub.add_parser("transform", parents=[common], help="numeric transformation checks")
    t.add_argument("name", nargs="?", default="all")
    t.add_argument("--prec", type=int, default=192)
    t.add_argument("--tau", action="append", help="sample base point a/b+c/d*i (repeatable)")

    lm = sub.add_parser("lemmas", parents=[common], help="numeric checks of the theta and eta lemmas")
    lm.add_argument("--prec", type=int, default=192)
    lm.add_argument("--tau", action="append")
    lm.add_argument("--seed", type=int, default=1)

    ls = sub.add_parser("list", parents=[common], help="catalog of identities or transforms")
    ls.add_argument("kind", choices=("identities", "transforms"))
    ls.add_argument("--filter", default="")
    return p


_COMMANDS = {"expand": cmd_expand, "check": cmd_check, "transform": cmd_transform,
             "lemmas": cmd_lemmas, "list": cmd_list}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _COMMANDS[args.cmd](args)
    except (UsageError, KeyError, ValueError, nahm.NotPositiveDefinite) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"nahmvec {args.cmd}: error: {msg}", file=sys.stderr)
        return 2
    body, ok, walls = out
    if args.format == "json":
        print(json.dumps({"report": body, "wall_times": walls}, indent=2, sort_keys=True))
    else:
        print(_text(body))
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
