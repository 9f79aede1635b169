"""Command-line front end.

Exit codes: 0 success, 1 a formula disagreed with the oracle (or a
verification suite failed), 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from . import oracle
from .classify import CSV_COLUMNS, classify
from .cyclic_core import (
    CodeSpace,
    CyclicCode,
    basic_dual_zero,
    code_from_generator,
    code_space,
    hull_dimension,
    hull_generator,
    intersection_code,
    intersection_dimension,
    is_lcd,
    is_lcp,
    is_one_dim_hull,
)
from .errors import CycloHullError, NotADivisor
from .field_tower import multiplicative_order, prime_power
from .poly import is_self_reciprocal, parse_poly
from .verify import run_code_suite, run_trace_suite

MAX_Q = 2**12
MAX_BIG_FIELD = 2**24
MAX_TRACE_FIELD = 2**16

CODE_SCHEMA = {
    "type": "object",
    "required": ["q", "n", "generator", "dim", "bz_dual", "hull_dim", "lcd"],
    "properties": {
        "q": {"type": "integer"},
        "n": {"type": "integer"},
        "generator": {"type": "array", "items": {"type": "integer"}},
        "dim": {"type": "integer"},
        "bz_dual": {"type": "array", "items": {"type": "integer"}},
        "hull_dim": {"type": "integer"},
        "lcd": {"type": "boolean"},
    },
}


_INTS = {"type": "array", "items": {"type": "integer"}}


def _obj(required: dict) -> dict:
    return {"type": "object", "required": list(required), "properties": required}


# documented JSON shape of each subcommand's output
SCHEMAS = {
    "factor": _obj({
        "q": {"type": "integer"}, "n": {"type": "integer"}, "m": {"type": "integer"},
        "factors": {"type": "array", "items": _obj({
            "leader": {"type": "integer"}, "coset": _INTS, "size": {"type": "integer"},
            "factor": _INTS, "factor_str": {"type": "string"},
            "self_reciprocal": {"type": "boolean"}})},
    }),
    "cosets": _obj({
        "q": {"type": "integer"}, "n": {"type": "integer"},
        "cosets": {"type": "array", "items": _obj({
            "leader": {"type": "integer"}, "elements": _INTS, "size": {"type": "integer"},
            "neg_pair": {"type": "integer"}})},
    }),
    "classify": _obj({
        "q": {"type": "integer"}, "n": {"type": "integer"}, "count": {"type": "integer"},
        "records": {"type": "array", "items": _obj({
            "generator": _INTS, "dim": {"type": "integer"}, "bz_dual": _INTS,
            "hull_dim": {"type": "integer"}, "lcd": {"type": "boolean"},
            "one_dim_hull": {"type": "boolean"}})},
    }),
    "hull": _obj({
        **CODE_SCHEMA["properties"],
        "one_dim_hull": {"type": "boolean"},
        "one_dim_hull_leader": {"type": ["integer", "null"]},
        "hull_generator": _INTS,
        "oracle": _obj({"hull_dim": {"type": "integer"}}),
        "agree": {"type": "boolean"},
    }),
    "lcp": _obj({
        "q": {"type": "integer"}, "n": {"type": "integer"}, "c": CODE_SCHEMA, "d": CODE_SCHEMA,
        "lcp": {"type": "boolean"}, "generator_product_is_xn_minus_1": {"type": "boolean"},
        "oracle": _obj({"lcp": {"type": "boolean"}}), "agree": {"type": "boolean"},
    }),
    "intersect": _obj({
        "q": {"type": "integer"}, "n": {"type": "integer"}, "c": CODE_SCHEMA, "d": CODE_SCHEMA,
        "intersection_dim": {"type": "integer"}, "intersection_generator": _INTS,
        "oracle": _obj({"intersection_dim": {"type": "integer"}}), "agree": {"type": "boolean"},
    }),
}
_CHECKS = {"type": "object", "additionalProperties": _obj(
    {"passed": {"type": "integer"}, "failed": {"type": "integer"}})}
SCHEMAS["trace-check"] = _obj({
    "q": {"type": "integer"}, "n": {"type": "integer"}, "m": {"type": "integer"},
    "checks": _CHECKS, "ok": {"type": "boolean"},
})
SCHEMAS["verify"] = _obj({
    **SCHEMAS["trace-check"]["properties"],
    "lcd_count": {"type": "integer"}, "one_dim_hull_count": {"type": "integer"},
    "codes": {"type": "integer"},
})


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument handling


def _space(args, allow_m: bool = True) -> CodeSpace:
    q = args.q
    try:
        prime_power(q)
    except CycloHullError:
        raise UsageError(f"--q {q} is not a prime power") from None
    if q > MAX_Q:
        raise UsageError(f"--q {q} exceeds the supported maximum {MAX_Q}")
    n = getattr(args, "n", None)
    m = getattr(args, "m", None) if allow_m else None
    if (n is None) == (m is None):
        raise UsageError("give exactly one of --n and --m" if allow_m else "--n is required")
    if m is not None:
        if m < 1:
            raise UsageError("--m must be positive")
        n = q**m - 1
    if n < 1:
        raise UsageError("--n must be positive")
    if gcd(n, q) != 1:
        raise UsageError(f"gcd(n={n}, q={q}) != 1; repeated-root codes are not supported")
    if q ** multiplicative_order(q, n) > MAX_BIG_FIELD:
        raise UsageError(f"splitting field of x^{n} - 1 over F_{q} is too large")
    return code_space(q, n)


def _code(sp: CodeSpace, text: str, flag: str) -> CyclicCode:
    try:
        gen = parse_poly(sp.field, text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None
    try:
        return code_from_generator(sp, gen)
    except NotADivisor as exc:
        raise UsageError(f"{flag}: {exc}") from None


def code_summary(code: CyclicCode) -> dict:
    hd = hull_dimension(code)
    return {
        "q": code.q,
        "n": code.n,
        "generator": list(code.gen.coeffs),
        "dim": code.dim,
        "bz_dual": sorted(basic_dual_zero(code)),
        "hull_dim": hd,
        "lcd": is_lcd(code),
    }


# ---------------------------------------------------------------------------
# output


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]

    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"


def _csv(headers: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue()


def _report_text(report: dict) -> str:
    return "".join(f"{k}: {json.dumps(v)}\n" for k, v in report.items())


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, report: dict) -> None:
    if args.format == "table":
        _emit(args, _report_text(report))
    else:
        _emit(args, json.dumps(report, indent=2) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_factor(args) -> int:
    sp = _space(args, allow_m=False)
    rows = []
    for j, f in sp.factor_xn_minus_1().items():
        rows.append({
            "leader": j,
            "coset": list(sp.table.cosets[j].elements),
            "size": sp.table.size(j),
            "factor": list(f.coeffs),
            "factor_str": str(f),
            "self_reciprocal": is_self_reciprocal(f),
        })
    if args.format == "json":
        _emit(args, json.dumps({"q": sp.q, "n": sp.n, "m": sp.tower.m, "factors": rows}, indent=2) + "\n")
        return 0
    headers = ["leader", "coset", "size", "factor", "self_reciprocal"]
    body = [[str(r["leader"]), " ".join(map(str, r["coset"])), str(r["size"]),
             r["factor_str"], str(r["self_reciprocal"]).lower()] for r in rows]
    _emit(args, (_csv if args.format == "csv" else _table)(headers, body))
    return 0


def cmd_cosets(args) -> int:
    sp = _space(args)
    t = sp.table
    rows = [{"leader": j, "elements": list(c.elements), "size": c.size, "neg_pair": t.neg_pair[j]}
            for j, c in t.cosets.items()]
    if args.format == "json":
        _emit(args, json.dumps({"q": sp.q, "n": sp.n, "cosets": rows}, indent=2) + "\n")
        return 0
    headers = ["leader", "elements", "size", "neg_pair"]
    body = [[str(r["leader"]), " ".join(map(str, r["elements"])), str(r["size"]), str(r["neg_pair"])]
            for r in rows]
    _emit(args, (_csv if args.format == "csv" else _table)(headers, body))
    return 0


def cmd_classify(args) -> int:
    sp = _space(args)
    try:
        records = classify(sp.q, sp.n, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.hull_dim is not None:
        records = [r for r in records if r.hull_dim == args.hull_dim]
    if args.lcd_only:
        records = [r for r in records if r.lcd]
    if args.format == "json":
        payload = {"q": sp.q, "n": sp.n, "count": len(records), "records": [r.as_dict() for r in records]}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        body = [r.as_csv_row() for r in records]
        _emit(args, (_csv if args.format == "csv" else _table)(list(CSV_COLUMNS), body))
    return 0


def cmd_hull(args) -> int:
    sp = _space(args, allow_m=False)
    code = _code(sp, args.gen, "--gen")
    report = code_summary(code)
    odh, witness = is_one_dim_hull(code)
    report["one_dim_hull"] = odh
    report["one_dim_hull_leader"] = witness
    report["hull_generator"] = list(hull_generator(code).coeffs)
    brute = oracle.hull_dim(oracle.code_matrix(code))
    report["oracle"] = {"hull_dim": brute}
    report["agree"] = brute == report["hull_dim"] and report["lcd"] == (brute == 0)
    _emit_report(args, report)
    return 0 if report["agree"] else 1


def cmd_lcp(args) -> int:
    sp = _space(args, allow_m=False)
    c = _code(sp, args.gen_c, "--gen-c")
    d = _code(sp, args.gen_d, "--gen-d")
    lcp = is_lcp(c, d)
    identity = c.gen * d.gen == sp.xn1
    brute = oracle.is_lcp(oracle.code_matrix(c), oracle.code_matrix(d))
    report = {
        "q": sp.q,
        "n": sp.n,
        "c": code_summary(c),
        "d": code_summary(d),
        "lcp": lcp,
        "generator_product_is_xn_minus_1": identity,
        "oracle": {"lcp": brute},
        "agree": lcp == brute == identity,
    }
    _emit_report(args, report)
    return 0 if report["agree"] else 1


def cmd_intersect(args) -> int:
    sp = _space(args, allow_m=False)
    c = _code(sp, args.gen_c, "--gen-c")
    d = _code(sp, args.gen_d, "--gen-d")
    ell = intersection_dimension(c, d)
    inter = intersection_code(c, d)
    brute = oracle.intersect_dim(oracle.code_matrix(c), oracle.code_matrix(d))
    report = {
        "q": sp.q,
        "n": sp.n,
        "c": code_summary(c),
        "d": code_summary(d),
        "intersection_dim": ell,
        "intersection_generator": list(inter.gen.coeffs),
        "oracle": {"intersection_dim": brute},
        "agree": ell == brute == inter.dim,
    }
    _emit_report(args, report)
    return 0 if report["agree"] else 1


def _suite_report(sp: CodeSpace, results) -> dict:
    return {
        "q": sp.q,
        "n": sp.n,
        "m": sp.tower.m,
        "checks": {r.name: r.as_dict() for r in results},
        "ok": all(r.ok for r in results),
    }


def _trace_space(args) -> CodeSpace:
    sp = _space(args)
    if not sp.is_primitive_length:
        raise UsageError(f"trace suites need n = q^m - 1, got n={sp.n}")
    if sp.q**sp.tower.m > MAX_TRACE_FIELD:
        raise UsageError(f"q^m exceeds {MAX_TRACE_FIELD} for trace suites")
    return sp


def cmd_trace_check(args) -> int:
    sp = _trace_space(args)
    report = _suite_report(sp, run_trace_suite(sp, samples=args.samples, seed=args.seed))
    _emit_report(args, report)
    return 0 if report["ok"] else 1


def cmd_verify(args) -> int:
    sp = _space(args)
    results = run_code_suite(sp)
    if sp.is_primitive_length and sp.q**sp.tower.m <= MAX_TRACE_FIELD:
        results += run_trace_suite(sp, samples=args.samples, seed=args.seed)
    report = _suite_report(sp, results)
    checks = report["checks"]
    report["lcd_count"] = checks["lcd_agreement"]["lcd_count"]
    report["one_dim_hull_count"] = checks["one_dim_hull_agreement"]["one_dim_hull_count"]
    report["codes"] = checks["lcd_agreement"]["codes"]
    _emit_report(args, report)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclohull",
        description="Hulls, LCD and LCP pairs of cyclic codes via basic dual zeros.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, fmt="table", m=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--q", type=int, required=True, help="field size (prime power)")
        p.add_argument("--n", type=int, help="code length, gcd(n, q) = 1")
        if m:
            p.add_argument("--m", type=int, help="use n = q^m - 1")
        p.add_argument("--format", choices=("table", "json", "csv"), default=fmt)
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("factor", cmd_factor, "factor x^n - 1 over F_q", m=False)
    add("cosets", cmd_cosets, "list q-cyclotomic cosets modulo n")

    p = add("classify", cmd_classify, "classify every cyclic code of length n")
    p.add_argument("--hull-dim", type=int, metavar="K", help="keep codes with hull dimension K")
    p.add_argument("--lcd-only", action="store_true", help="keep LCD codes only")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")

    p = add("hull", cmd_hull, "hull of one code", fmt="json", m=False)
    p.add_argument("--gen", required=True, help="generator, comma-separated, low degree first")

    for name, func, help in (("lcp", cmd_lcp, "LCP test for a pair of codes"),
                             ("intersect", cmd_intersect, "intersection dimension of two codes")):
        p = add(name, func, help, fmt="json", m=False)
        p.add_argument("--gen-c", required=True)
        p.add_argument("--gen-d", required=True)

    for name, func, help in (("trace-check", cmd_trace_check, "trace-representation suites"),
                             ("verify", cmd_verify, "all verification suites")):
        p = add(name, func, help, fmt="json")
        p.add_argument("--samples", type=int, default=1000, help="random trace specs")
        p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cyclohull {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
