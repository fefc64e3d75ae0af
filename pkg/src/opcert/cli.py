"""Command-line front end: table building, enclosures, and verification scans.

Exit codes: 0 all asserted checks hold, 1 at least one Fails, 2 usage error,
3 Undetermined results only (no Fails).  JSON reports render intervals as
decimal strings and are byte-identical across runs for the same invocation
and cache (wall-clock runtime is printed to stderr, not written to files).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from .cutoffs import constants_json, cutoff_set, n_tilde, turan_cutoff_set
from .differences import (G_value, H_value, UL_lemma24, asymptote_scan,
                          signed_diff_log, verify_theorem14, C_r)
from .intervals import CertInterval, Tri, ipow, tri_compare
from .overpartitions import OverpartitionTable, build_table
from .turan import (m_polynomials, pbar_power_check, power_quotient_check,
                    reverse_turan_check, s_bounds_check, theorem35_check)
from .zuckerman import WidthError, certified_enclosure

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_UNDETERMINED = 0, 1, 2, 3
DEFAULT_BITS = 384


def iv_json(iv: CertInterval) -> dict:
    return {"lo": str(iv.lo), "hi": str(iv.hi), "bits": iv.bits}


def _cache_path(args) -> Path | None:
    if getattr(args, "cache", None):
        return Path(args.cache)
    env = os.environ.get("OPART_CACHE_DIR")
    if env:
        return Path(env) / "pbar.tsv"
    return None


def _get_table(args, need_max: int) -> OverpartitionTable:
    path = _cache_path(args)
    if path is not None and path.exists():
        table = OverpartitionTable.load(path)
        if table.max_n >= need_max:
            return table
    table = build_table(need_max)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        table.save(path)
    return table


def _summary(rows: list[dict]) -> dict:
    counts = {"holds": 0, "fails": 0, "undetermined": 0}
    for row in rows:
        v = row.get("verdict", "Holds")
        counts[{"Holds": "holds", "Fails": "fails"}.get(v, "undetermined")] += 1
    return counts


def _emit(args, payload: dict, started: float) -> int:
    out = getattr(args, "out", None)
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    summary = payload.get("summary")
    if summary is not None:
        print(f"holds={summary['holds']} fails={summary['fails']} "
              f"undetermined={summary['undetermined']} "
              f"runtime={time.time() - started:.2f}s", file=sys.stderr)
        if summary["fails"]:
            return EXIT_FAILS
        if summary["undetermined"]:
            return EXIT_UNDETERMINED
    return EXIT_OK


def _write_csv(path: str, rows: list[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "value_lo", "value_hi", "bound_lo", "bound_hi"])
        writer.writerows(rows)


# -- subcommands -------------------------------------------------------------


def cmd_table(args) -> int:
    table = build_table(args.max)
    path = _cache_path(args)
    if path is None:
        print("no cache path given (use --cache or OPART_CACHE_DIR)", file=sys.stderr)
        return EXIT_USAGE
    path.parent.mkdir(parents=True, exist_ok=True)
    table.save(path)
    print(f"wrote {args.max + 1} values to {path}")
    return EXIT_OK


def cmd_enclose(args) -> int:
    started = time.time()
    table = _get_table(args, args.n)
    enc = certified_enclosure(args.n, args.N, args.bits)
    exact = table.values[args.n]
    contained = enc.total.lo <= exact <= enc.total.hi
    payload = {
        "command": "enclose",
        "parameters": {"n": args.n, "N": args.N, "bits": args.bits},
        "partial_sum": iv_json(enc.partial),
        "error_bound": iv_json(enc.err),
        "total": iv_json(enc.total),
        "exact": str(exact),
        "summary": {"holds": int(contained), "fails": int(not contained),
                    "undetermined": 0},
    }
    return _emit(args, payload, started)


def cmd_diff(args) -> int:
    started = time.time()
    table = _get_table(args, args.n + args.r)
    dv = signed_diff_log(table, args.n, args.r, args.alpha, args.bits)
    payload = {
        "command": "diff",
        "parameters": {"n": args.n, "r": args.r, "alpha": str(args.alpha),
                       "bits": args.bits},
        "value": iv_json(dv.value),
    }
    return _emit(args, payload, started)


def _verify_rows(args, table: OverpartitionTable) -> tuple[list[dict], list[tuple]]:
    """(json rows, csv rows) for one verify/scan target over [from, to]."""
    bits = args.bits
    rows, csv_rows = [], []
    for n in range(getattr(args, "from_n"), args.to + 1):
        if args.target == "lemma21":
            g = abs(G_value(table, n, args.r, bits))
            bound = 1 / ipow(CertInterval.from_exact(n, bits),
                             Fraction(2 * args.r + 3, 2))
            verdict = "Holds" if g.hi < bound.lo else (
                "Fails" if g.lo > bound.hi else "Undetermined")
            rows.append({"n": n, "verdict": verdict, "value": iv_json(g),
                         "bound": iv_json(bound)})
            csv_rows.append((n, g.lo, g.hi, bound.lo, bound.hi))
        elif args.target == "lemma24":
            L, U = UL_lemma24(n, args.r, args.alpha, bits)
            h = H_value(n, args.r, args.alpha, bits)
            checks = (tri_compare(L, h), tri_compare(h, U))
            verdict = ("Holds" if all(c is Tri.LESS for c in checks) else
                       "Fails" if any(c is Tri.GREATER for c in checks)
                       else "Undetermined")
            rows.append({"n": n, "verdict": verdict, "value": iv_json(h),
                         "lower": iv_json(L), "upper": iv_json(U)})
            csv_rows.append((n, h.lo, h.hi, L.lo, U.hi))
        elif args.target == "theorem14":
            rep = verify_theorem14(table, n, args.r, args.alpha, bits)
            rows.append({"n": n, "verdict": rep.verdict, "value": iv_json(rep.value),
                         "lower": iv_json(rep.lower), "upper": iv_json(rep.upper)})
            csv_rows.append((n, rep.value.lo, rep.value.hi, rep.lower.lo, rep.upper.hi))
        elif args.target in ("lemma31", "lemma32"):
            side = "plus" if args.target == "lemma31" else "minus"
            verdict = s_bounds_check(table, n, side, bits)
            rows.append({"n": n, "verdict": verdict})
        elif args.target == "lemma33":
            res = power_quotient_check(n, args.alpha, bits, force=True)
            rows.append({"n": n, "verdict": res.verdict, "in_cutoff": res.in_cutoff})
        elif args.target == "lemma34":
            rows.append({"n": n, "verdict": pbar_power_check(table, n, bits)})
        elif args.target == "theorem35":
            res = theorem35_check(table, n, args.alpha, bits,
                                  force=getattr(args, "force", False))
            rows.append({"n": n, "verdict": res.verdict,
                         "parts": res.verdicts, "in_cutoff": res.in_cutoff})
        elif args.target == "identity":
            mp = m_polynomials(n, args.alpha, max(bits, 256))
            resid = mp.identity_residual
            contains = resid.lo <= 0 <= resid.hi
            rows.append({"n": n, "verdict": "Holds" if contains else "Fails",
                         "residual": iv_json(resid)})
        elif args.target == "turan":
            rep = reverse_turan_check(table, n, args.alpha, bits)
            agree = (rep.cubic_class == "OneRealTwoComplex") == (rep.verdict == "Holds")
            if not agree:
                verdict = "Fails"
            elif rep.hypothesis == "Holds":
                verdict = rep.verdict
            else:
                # the reverse inequality is asserted only where both ratio
                # quotients exceed 1; outside that the row cannot Hold
                verdict = "Fails" if rep.hypothesis == "Fails" else "Undetermined"
            rows.append({"n": n, "verdict": verdict, "hypothesis": rep.hypothesis,
                         "cubic_class": rep.cubic_class,
                         "lhs": iv_json(rep.lhs), "rhs": iv_json(rep.rhs)})
            csv_rows.append((n, rep.lhs.lo, rep.lhs.hi, rep.rhs.lo, rep.rhs.hi))
        else:
            raise ValueError(f"unknown target {args.target}")
    return rows, csv_rows


def cmd_verify(args) -> int:
    started = time.time()
    need = args.to + max(getattr(args, "r", 0) or 0, 3) + 1
    needs_table = args.target not in ("lemma24", "lemma33", "identity")
    table = _get_table(args, need) if needs_table else None
    rows, csv_rows = _verify_rows(args, table)
    if getattr(args, "csv", None) and csv_rows:
        _write_csv(args.csv, csv_rows)
    params = {"target": args.target, "from": getattr(args, "from_n"),
              "to": args.to, "bits": args.bits}
    if getattr(args, "r", None) is not None:
        params["r"] = args.r
    if getattr(args, "alpha", None) is not None:
        params["alpha"] = str(args.alpha)
    payload = {
        "command": "verify",
        "parameters": params,
        "rows": rows,
        "summary": _summary(rows),
        "precision_used": args.bits,
    }
    return _emit(args, payload, started)


def cmd_scan(args) -> int:
    args.target = "turan"
    return cmd_verify(args)


def cmd_asymptote(args) -> int:
    started = time.time()
    points = sorted({int(p) for p in args.points.split(",")})
    table = _get_table(args, points[-1] + args.r)
    scan = asymptote_scan(table, args.r, args.alpha, points, args.bits)
    limit = C_r(args.r, args.bits)
    payload = {
        "command": "asymptote",
        "parameters": {"r": args.r, "alpha": str(args.alpha),
                       "points": points, "bits": args.bits},
        "limit": iv_json(limit),
        "rows": [{"n": n, "scaled": iv_json(iv)} for n, iv in scan],
    }
    if getattr(args, "csv", None):
        _write_csv(args.csv, [(n, iv.lo, iv.hi, limit.lo, limit.hi)
                              for n, iv in scan])
    return _emit(args, payload, started)


def cmd_constants(args) -> int:
    text = constants_json(args.r, args.alpha, args.bits)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opcert",
        description="certified overpartition numerics and inequality verification")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, table=True):
        p.add_argument("--bits", type=int, default=DEFAULT_BITS)
        p.add_argument("--out", help="write the JSON report to this path")
        if table:
            p.add_argument("--cache", help="table cache file (overrides OPART_CACHE_DIR)")

    p = sub.add_parser("table", help="build the exact value table and cache it")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--cache", help="cache file path")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enclose", help="series enclosure of one value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True, help="truncation order (odd)")
    common(p)
    p.set_defaults(func=cmd_enclose)

    p = sub.add_parser("diff", help="signed r-fold difference of log r_alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", type=_fraction, default=Fraction(0))
    common(p)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("verify", help="run one verification campaign over a range")
    p.add_argument("target", choices=["lemma21", "lemma24", "theorem14", "lemma31",
                                      "lemma32", "lemma33", "lemma34", "theorem35",
                                      "identity", "turan"])
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", type=_fraction, default=Fraction(0))
    p.add_argument("--csv", help="write plot data (n, value, bound) to this path")
    p.add_argument("--force", action="store_true",
                   help="evaluate below hypothesis cutoffs as exploration")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exploratory scan (turan)")
    p.add_argument("what", choices=["turan"])
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--alpha", type=_fraction, default=Fraction(0))
    p.add_argument("--csv")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("asymptote", help="scaled difference values against the limit")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", type=_fraction, default=Fraction(0))
    p.add_argument("--points", required=True, help="comma separated n values")
    p.add_argument("--csv")
    common(p)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("constants", help="dump the constants catalog as JSON")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--alpha", type=_fraction, default=Fraction(0))
    common(p, table=False)
    p.set_defaults(func=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    # verify targets that need --r
    if getattr(args, "func", None) is cmd_verify and args.target in (
            "lemma21", "lemma24", "theorem14") and args.r is None:
        print(f"target {args.target} requires --r", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except WidthError as exc:
        print(f"enclosure too wide: {exc}", file=sys.stderr)
        return EXIT_UNDETERMINED
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
