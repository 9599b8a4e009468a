"""Command-line front end.

Every subcommand parses into a ``JobSpec``, ``run`` maps the job to a
payload ``{"meta": {...}, "result": {...}}`` with all leaf values
pre-rendered as strings (large integers and exact rationals survive any
JSON reader), and the payload is serialized as canonical JSON (sorted
keys, two-space indent) or as TSV.

Exit codes: 0 success, 2 malformed input, 3 request outside the supported
computational range.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import engine, hecke, strata
from .arith import DEFAULT_CAP, euler_phi
from .errors import InputError, ScopeError
from .grouptheory import build_context
from .kostant import lie_n_cohomology
from .reps import Bound, Weight, central_weight, weyl_dim

VERSION = "0.1.0"


# ---------------------------------------------------------------------------
# parsing helpers

def _int(tok: str) -> int:
    try:
        return int(tok.strip())
    except ValueError:
        raise InputError(f"expected an integer, got {tok!r}")


def parse_bound(tok: str) -> Bound:
    t = tok.strip()
    if t in ("inf", "+inf"):
        return math.inf
    if t == "-inf":
        return -math.inf
    return _int(t)


def parse_weight(text: str) -> Weight:
    body, m0 = text.strip(), 0
    if "@" in body:
        body, tail = body.split("@", 1)
        m0 = _int(tail)
    parts = [p for p in body.split(",") if p.strip() != ""]
    if not parts:
        raise InputError(f"empty weight in {text!r}")
    return Weight(tuple(_int(p) for p in parts), m0)


def parse_set(text: str) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise InputError(f"empty index set in {text!r}")
    return tuple(_int(p) for p in parts)


def parse_profile(text: str) -> tuple[Bound, ...]:
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise InputError(f"empty profile in {text!r}")
    return tuple(parse_bound(p) for p in parts)


def parse_chain(text: str | None) -> engine.Chain:
    if text is None or text.strip() == "":
        return engine.Chain(())
    entries = []
    for item in text.split(","):
        if ":" not in item:
            raise InputError(f"chain items look like s:a, got {item!r}")
        s, a = item.split(":", 1)
        entries.append((_int(s), parse_bound(a)))
    return engine.Chain(tuple(entries))


def parse_matrix(text: str):
    if text.strip() == "identity":
        return None
    rows = []
    for row in text.split(";"):
        rows.append(tuple(_int(x) for x in row.split(",")))
    if not rows or any(len(r) != len(rows) for r in rows):
        raise InputError(f"matrix must be square, got {text!r}")
    return tuple(rows)


# ---------------------------------------------------------------------------
# rendering helpers

def _fmt_bound(b: Bound) -> str:
    if b == math.inf:
        return "inf"
    if b == -math.inf:
        return "-inf"
    return str(b)


def _fmt_weight(a, m0) -> str:
    return ",".join(str(x) for x in a) + "@" + str(m0)


def _fmt_set(S) -> str:
    return ",".join(str(s) for s in S)


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_matrix(g) -> str:
    return ";".join(",".join(str(x) for x in row) for row in g)


REPORT_COLUMNS = ["S", "degree", "weight", "mult", "central_weight",
                  "sheaf_weight", "pairings"]


def _report_rows(cls: engine.SymbolicClass, label: str | None = None):
    rows = []
    for S, degree, levi, mult, central, sheaf, pairings in engine.graded_report(cls):
        w = levi.as_weight()
        row = {"S": _fmt_set(S), "degree": str(degree),
               "weight": _fmt_weight(w.a, w.m0), "mult": str(mult),
               "central_weight": str(central), "sheaf_weight": str(sheaf),
               "pairings": ",".join(str(p) for p in pairings)}
        if label is not None:
            row = {"profile": label, **row}
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# job dispatch

@dataclass
class JobSpec:
    command: str
    options: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.options[key]

    def get(self, key, default=None):
        return self.options.get(key, default)


def _ctx(spec: JobSpec):
    return build_context(spec["d"], spec["n"])


def _run_context(spec: JobSpec):
    ctx = _ctx(spec)
    return {
        "dimG": str(ctx.dimG),
        "weylOrder": str(ctx.weylOrder),
        "positiveRootCount": str(len(ctx.positiveRoots)),
        "rho": _fmt_weight(ctx.rho.a, ctx.rho.m0),
        "openStratumDim": str(ctx.c),
        "stratumDims": [str(x) for x in ctx.stratumDims],
    }


def _run_strata(spec: JobSpec):
    ctx = _ctx(spec)
    if spec["S"] is not None:
        S = spec["S"]
        r = spec["r"] if spec["r"] is not None else min(S)
        return {"columns": ["r", "S", "doubleCosets"],
                "rows": [{"r": str(r), "S": _fmt_set(S),
                          "doubleCosets": str(strata.double_coset_count(ctx, r, S))}]}
    indices = range(ctx.d) if spec["r"] is None else [spec["r"]]
    rows = []
    for r in indices:
        rows.append({"r": str(r), "count": str(strata.strata_count(ctx, r)),
                     "stratumDim": str(ctx.stratumDims[ctx.d - r])})
    return {"columns": ["r", "count", "stratumDim"], "rows": rows}


def _run_kostant(spec: JobSpec):
    ctx = _ctx(spec)
    module = lie_n_cohomology(ctx, spec["S"], spec["lam"])
    rows = []
    for s in module.summands:
        w = s.levi.as_weight()
        rows.append({"degree": str(s.degree),
                     "weight": _fmt_weight(w.a, w.m0),
                     "mult": str(s.mult),
                     "dim": str(weyl_dim(s.levi)),
                     "pairings": ",".join(str(p) for p in s.pairings)})
    return {"S": _fmt_set(spec["S"]),
            "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
            "centralWeight": str(central_weight(spec["lam"])),
            "columns": ["degree", "weight", "mult", "dim", "pairings"],
            "rows": rows}


def _class_result(spec: JobSpec, cls: engine.SymbolicClass, **extra):
    out = {"r": str(spec["r"]),
           "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
           "columns": list(REPORT_COLUMNS),
           "rows": _report_rows(cls)}
    out.update(extra)
    return out


def _run_chain_term(spec: JobSpec):
    ctx = _ctx(spec)
    cls = engine.chain_term(ctx, spec["chain"], spec["r"], spec["lam"])
    chain_s = ",".join(f"{s}:{_fmt_bound(a)}" for s, a in spec["chain"].entries)
    if spec.get("mode") == "euler":
        return {"r": str(spec["r"]),
                "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
                "chain": chain_s,
                "euler": _fmt_fraction(engine.euler_evaluate(cls, ctx))}
    return _class_result(spec, cls, chain=chain_s)


def _run_restrict_weighted(spec: JobSpec):
    ctx = _ctx(spec)
    cls = engine.restrict_weighted(ctx, spec["profile"], spec["lam"], spec["r"])
    if spec.get("mode") == "euler":
        return {"r": str(spec["r"]),
                "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
                "profile": [_fmt_bound(p) for p in spec["profile"]],
                "euler": _fmt_fraction(engine.euler_evaluate(cls, ctx))}
    return _class_result(spec, cls,
                         profile=[_fmt_bound(p) for p in spec["profile"]])


def _run_restrict_ic(spec: JobSpec):
    ctx = _ctx(spec)
    upper_cls, lower_cls = engine.restrict_ic(ctx, spec["lam"], spec["r"])
    upper, lower = strata.ic_profiles(ctx.d)
    base = {"r": str(spec["r"]),
            "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
            "upperProfile": [_fmt_bound(p) for p in upper],
            "lowerProfile": [_fmt_bound(p) for p in lower]}
    if spec.get("mode") == "euler":
        eu = engine.euler_evaluate(upper_cls, ctx)
        el = engine.euler_evaluate(lower_cls, ctx)
        base.update({"eulerUpper": _fmt_fraction(eu),
                     "eulerLower": _fmt_fraction(el),
                     "agree": "true" if eu == el else "false"})
        return base
    base.update({"columns": ["profile"] + REPORT_COLUMNS,
                 "rows": (_report_rows(upper_cls, "upper")
                          + _report_rows(lower_cls, "lower"))})
    return base


def _run_euler(spec: JobSpec):
    ctx = _ctx(spec)
    profile = spec["profile"]
    if profile is None:
        profile = strata.ic_profiles(ctx.d)[0]
    cls = engine.restrict_weighted(ctx, profile, spec["lam"], spec["r"])
    val = engine.euler_evaluate(cls, ctx)
    return {"r": str(spec["r"]),
            "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
            "profile": [_fmt_bound(p) for p in profile],
            "euler": _fmt_fraction(val)}


def _run_expansion(spec: JobSpec):
    ctx = _ctx(spec)
    r = spec["r"]
    engine._check_r(ctx.d, r)
    rows = []
    for subset, sign in engine.expansion_terms(ctx.d - 1 - r):
        extras = tuple(r + i for i in subset)
        plain = engine.chain_bounds_for_profile(spec["lam"], spec["profile"], extras)
        with_r = engine.chain_bounds_for_profile(spec["lam"], spec["profile"],
                                                 extras + (r,))
        for chain, chain_sign in ((plain, sign), (with_r, -sign)):
            S = tuple(sorted(set(chain.indices) | {r}))
            rows.append({"subset": _fmt_set(subset) or "-",
                         "sign": str(chain_sign),
                         "chain": ",".join(f"{s}:{_fmt_bound(a)}"
                                           for s, a in chain.entries) or "-",
                         "S": _fmt_set(S)})
    return {"r": str(r),
            "lam": _fmt_weight(spec["lam"].a, spec["lam"].m0),
            "profile": [_fmt_bound(p) for p in spec["profile"]],
            "columns": ["subset", "sign", "chain", "S"], "rows": rows}


def _datum(spec: JobSpec) -> hecke.HeckeDatum:
    return hecke.HeckeDatum(spec["d"], spec["n"], spec["m"])


def _run_hecke_index(spec: JobSpec):
    value = hecke.hecke_index(_datum(spec), spec["S"])
    return {"m": str(spec["m"]), "S": _fmt_set(spec["S"]), "value": str(value)}


def _run_transfer_degree(spec: JobSpec):
    value = hecke.transfer_degree(_datum(spec))
    return {"m": str(spec["m"]), "value": str(value)}


def _run_fiber_count(spec: JobSpec):
    datum = _datum(spec)
    return {"m": str(spec["m"]), "S": _fmt_set(spec["S"]),
            "value": str(hecke.boundary_fiber_count(datum, spec["S"])),
            "cosetValue": str(hecke.reduction_fiber_count(datum, spec["S"]))}


def _run_hecke_matrix(spec: JobSpec):
    datum = _datum(spec)
    struct = hecke.hecke_matrix_structure(datum, spec["S"], spec["g"],
                                          cap=spec["cap"])
    rows = [{"to": str(i), "from": str(j), "count": str(c)}
            for i, j, c in struct.entries]
    return {"m": str(spec["m"]), "S": _fmt_set(spec["S"]),
            "classes": [_fmt_matrix(g) for g in struct.classes],
            "columnTotals": [str(t) for t in struct.column_totals()],
            "columns": ["to", "from", "count"], "rows": rows}


def _run_oracle(spec: JobSpec):
    d, n, r, cap = spec["d"], spec["n"], spec["r"], spec["cap"]
    ctx = build_context(d, n)
    checks = []
    formula = strata.strata_count(ctx, r)
    brute = strata.strata_count_bruteforce(d, n, r, cap=cap)
    checks.append({"name": f"strata d={d} n={n} r={r}",
                   "formula": str(formula), "bruteforce": str(brute),
                   "ok": "PASS" if formula == brute else "FAIL"})
    if spec["S"] is not None:
        S = spec["S"]
        formula = strata.double_coset_count(ctx, r, S)
        brute = strata.double_coset_count_bruteforce(d, n, r, S, cap=cap)
        checks.append({"name": f"doubleCosets d={d} n={n} S={_fmt_set(S)}",
                       "formula": str(formula), "bruteforce": str(brute),
                       "ok": "PASS" if formula == brute else "FAIL"})
        refined = strata.refinement_check_bruteforce(d, n, r, S, cap=cap)
        checks.append({"name": f"refinement d={d} n={n} S={_fmt_set(S)}",
                       "formula": str(formula),
                       "bruteforce": str(formula) if refined else "mismatch",
                       "ok": "PASS" if refined else "FAIL"})
    image = strata.similitude_image_bruteforce(d, n, cap=cap)
    checks.append({"name": f"similitudeImage d={d} n={n}",
                   "formula": str(euler_phi(n)), "bruteforce": str(len(image)),
                   "ok": "PASS" if len(image) == euler_phi(n) else "FAIL"})
    return {"columns": ["name", "formula", "bruteforce", "ok"], "rows": checks}


_HANDLERS = {
    "context": _run_context,
    "strata": _run_strata,
    "kostant": _run_kostant,
    "chain-term": _run_chain_term,
    "restrict-weighted": _run_restrict_weighted,
    "restrict-ic": _run_restrict_ic,
    "euler": _run_euler,
    "expansion": _run_expansion,
    "hecke-index": _run_hecke_index,
    "transfer-degree": _run_transfer_degree,
    "fiber-count": _run_fiber_count,
    "hecke-matrix": _run_hecke_matrix,
    "oracle": _run_oracle,
}


def run(spec: JobSpec) -> dict:
    try:
        handler = _HANDLERS[spec.command]
    except KeyError:
        raise InputError(f"unknown command {spec.command!r}")
    meta = {"command": spec.command, "d": str(spec["d"]), "n": str(spec["n"]),
            "version": VERSION}
    return {"meta": meta, "result": handler(spec)}


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="siegelstrata",
        description="boundary strata, truncated restrictions, and level "
                    "transfers for symplectic similitude groups")
    top.add_argument("--version", action="version", version=VERSION)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, need_m=False):
        p.add_argument("--d", type=int, required=True, help="genus")
        p.add_argument("--n", type=int, required=True, help="principal level")
        if need_m:
            p.add_argument("--m", type=int, required=True,
                           help="deeper level, a multiple of n")
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    def stratum(p):
        p.add_argument("--stratum", "--r", dest="r", type=int, required=True,
                       help="corank of the target stratum")

    def lam(p):
        p.add_argument("--lambda", "--lam", dest="lam", type=parse_weight,
                       required=True, help="dominant weight a1,..,ad[@m0]")

    def mode(p):
        p.add_argument("--mode", choices=("symbolic", "euler"),
                       default="symbolic")

    common(sub.add_parser("context", help="root-datum facts"))

    p = sub.add_parser("strata", help="stratum counts, or double cosets with --S")
    common(p)
    p.add_argument("--stratum", "--r", dest="r", type=int, default=None)
    p.add_argument("--S", type=parse_set, default=None)

    p = sub.add_parser("kostant", help="graded Levi decomposition of the "
                                       "nilpotent cohomology")
    common(p)
    p.add_argument("--S", type=parse_set, required=True)
    lam(p)

    p = sub.add_parser("chain-term", help="one truncated boundary term")
    common(p)
    stratum(p)
    lam(p)
    p.add_argument("--chain", type=parse_chain, default=engine.Chain(()),
                   help="threshold chain s:a,s:a (indices decreasing)")
    mode(p)

    p = sub.add_parser("restrict-weighted", help="stratum restriction of the "
                                                 "weight-truncated direct image")
    common(p)
    stratum(p)
    lam(p)
    p.add_argument("--profile", type=parse_profile, required=True,
                   help="d thresholds, entries integer or inf/-inf")
    mode(p)

    p = sub.add_parser("restrict-ic", help="stratum restriction of the "
                                           "intersection complex")
    common(p)
    stratum(p)
    lam(p)
    mode(p)

    p = sub.add_parser("euler", help="exact Euler evaluation of a restriction")
    common(p)
    stratum(p)
    lam(p)
    p.add_argument("--profile", type=parse_profile, default=None,
                   help="defaults to the upper intersection-complex profile")

    p = sub.add_parser("expansion", help="chain expansion of a restriction")
    common(p)
    stratum(p)
    lam(p)
    p.add_argument("--profile", type=parse_profile, required=True)

    p = sub.add_parser("hecke-index", help="level index along a stratum")
    common(p, need_m=True)
    p.add_argument("--S", type=parse_set, required=True)

    p = sub.add_parser("transfer-degree", help="index of the deeper principal level")
    common(p, need_m=True)

    p = sub.add_parser("fiber-count", help="fiber size of the level map on strata")
    common(p, need_m=True)
    p.add_argument("--S", type=parse_set, required=True)

    p = sub.add_parser("hecke-matrix", help="transfer-matrix support between "
                                            "stratum class sets")
    common(p, need_m=True)
    p.add_argument("--S", type=parse_set, required=True)
    p.add_argument("--g", type=parse_matrix, default=None,
                   help='matrix "a,b;c,d" or "identity"')
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("oracle", help="closed forms versus brute-force recounts")
    common(p)
    p.add_argument("--stratum", "--r", dest="r", type=int, default=0)
    p.add_argument("--S", type=parse_set, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    return top


def parse_args(argv=None) -> tuple[JobSpec, str]:
    ns = _build_parser().parse_args(argv)
    options = {k: v for k, v in vars(ns).items() if k not in ("command", "format")}
    return JobSpec(ns.command, options), getattr(ns, "format", "json")


# ---------------------------------------------------------------------------
# serialization

def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    result = payload.get("result", payload)
    lines = []
    if "rows" in result:
        cols = result["columns"]
        lines.append("\t".join(cols))
        for row in result["rows"]:
            lines.append("\t".join(row[c] for c in cols))
    else:
        for k in sorted(result):
            v = result[k]
            if isinstance(v, list):
                v = ",".join(v)
            lines.append(f"{k}\t{v}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        spec, fmt = parse_args(argv)
    except SystemExit as e:
        # argparse already reported; --help/--version exit 0, bad args exit 2
        return 0 if e.code in (0, None) else 2
    try:
        payload = run(spec)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ScopeError as e:
        print(f"out of range: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(render(payload, fmt))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
