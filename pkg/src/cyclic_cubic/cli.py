"""Command-line front end: compute, table, verify, selftest."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .errors import CubicError, InternalInconsistency, InvalidParameter, VerificationError
from .fixtures import load_fixtures, verify_rows
from .report import CHECK_NAMES, TABLE_COLUMNS, build_report, flatten, render_text, run, table_row
from .sweep import check_parameter, parameters

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3

_NEG_VALUE = re.compile(r"^-\d+(/-?\d+)?$")


def parse_n(text: str) -> tuple[int, int]:
    """'p/q' or an integer, kept unreduced."""
    num, _, den = text.strip().partition("/")
    try:
        return int(num), int(den) if den else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _map(fn, items, jobs: int):
    """Ordered map, in worker processes when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _csv_text(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _text_table(rows: list[dict], columns: list[str]) -> str:
    widths = {c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows]) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    lines += ["  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


# --- compute ---------------------------------------------------------------

def cmd_compute(args) -> int:
    if args.n is not None:
        n1, n2 = args.n
    elif args.n1 is not None and args.n2 is not None:
        n1, n2 = args.n1, args.n2
    else:
        print("error: give --n p/q or both --n1 and --n2", file=sys.stderr)
        return EXIT_INVALID
    try:
        report = build_report(n1, n2, timing=args.timing)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (VerificationError, InternalInconsistency) as exc:
        print(f"internal error for ({n1},{n2}): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        flat = flatten(report)
        sys.stdout.write(_csv_text([flat], list(flat)))
    else:
        print(render_text(report))
    return EXIT_OK


# --- table -----------------------------------------------------------------

TABLE_OUT = TABLE_COLUMNS + ["structure"] + CHECK_NAMES + ["notice"]


def table_entry(pair: tuple[int, int]) -> dict:
    """One output row; reducible pairs carry only the notice."""
    n1, n2 = pair
    row = dict.fromkeys(TABLE_OUT, "")
    row["n1"], row["n2"] = str(n1), str(n2)
    try:
        p = run(n1, n2)
    except InvalidParameter as exc:
        row["notice"] = f"skipped: {exc}"
        return row
    except CubicError as exc:
        row["notice"] = f"error: {exc}"
        return row
    row.update(table_row(p))
    row["structure"] = str(p.gen.structure)
    checks = p.gen.certificate.checks
    for name in CHECK_NAMES:
        row[name] = "" if name not in checks else ("ok" if checks[name] else "FAIL")
    return row


def cmd_table(args) -> int:
    if args.n2 < 1:
        print("error: --n2 must be positive", file=sys.stderr)
        return EXIT_INVALID
    pairs = [(n1, args.n2) for n1 in range(args.n1_min, args.n1_max + 1) if gcd(n1, args.n2) == 1]
    rows = _map(table_entry, pairs, args.jobs)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(rows, TABLE_OUT))
    else:
        sys.stdout.write(_text_table(rows, TABLE_OUT))
    failed = any(r["notice"].startswith("error") for r in rows)
    return EXIT_INTERNAL if failed else EXIT_OK


# --- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    try:
        rows = load_fixtures(args.fixtures)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    results = verify_rows(rows)
    elapsed = time.perf_counter() - t0
    passed = sum(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({
            "rows": [{"row": r.index, "n1": r.row.raw["n1"], "n2": r.row.raw["n2"],
                      "ok": r.ok, "diffs": r.diffs} for r in results],
            "passed": passed, "total": len(results)}, indent=2))
    elif args.format == "csv":
        out = [{"row": r.index, "n1": r.row.raw["n1"], "n2": r.row.raw["n2"],
                "ok": r.ok, "diffs": "; ".join(r.diffs)} for r in results]
        sys.stdout.write(_csv_text(out, ["row", "n1", "n2", "ok", "diffs"]))
    else:
        for r in results:
            if not r.ok:
                print(f"FAIL {r.label}")
                for d in r.diffs:
                    print(f"    {d}")
        print(f"{passed}/{len(results)} rows passed in {elapsed:.3f} s")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# --- selftest --------------------------------------------------------------

def _selftest_one(pair):
    try:
        return pair, check_parameter(*pair), None
    except (CubicError, AssertionError, ArithmeticError) as exc:
        return pair, None, f"{type(exc).__name__}: {exc}"


def cmd_selftest(args) -> int:
    t0 = time.perf_counter()
    counts: Counter = Counter()
    pairs = list(parameters(args.max_n1, args.max_n2))
    for pair, tag, err in _map(_selftest_one, pairs, args.jobs):
        if err is not None:
            print(f"FAIL (n1, n2) = {pair}: {err}")
            return EXIT_FAIL
        counts[tag or "reducible"] += 1
    elapsed = time.perf_counter() - t0
    keys = ["1", "2", "3i", "3ii", "reducible"]
    if args.format == "json":
        print(json.dumps({"counts": {k: counts[k] for k in keys}, "total": len(pairs),
                          "seconds": round(elapsed, 3)}, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text([{k: counts[k] for k in keys}], keys))
    else:
        print(" ".join(f"case {k}: {counts[k]}" for k in keys[:4])
              + f"; reducible: {counts['reducible']}")
        print(f"{len(pairs)} parameters passed in {elapsed:.2f} s")
    return EXIT_OK


# --- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    jobs_default = os.cpu_count() or 1
    parser = argparse.ArgumentParser(
        prog="cyclic-cubic",
        description="Integral bases and normal integral basis generators for the fields "
                    "defined by X^3 - nX^2 - (n+3)X - 1.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=["json", "text", "csv"], default=default)

    p = sub.add_parser("compute", help="full report for one parameter")
    p.add_argument("--n", type=parse_n, help="the parameter as p/q")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--timing", action="store_true", help="include wall-clock time")
    fmt(p, "text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="one row per coprime n1 in a range")
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--n1-min", type=int, required=True)
    p.add_argument("--n1-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=jobs_default)
    fmt(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="recompute tabulated rows")
    p.add_argument("--fixtures", help="CSV file (default: the embedded tables)")
    fmt(p, "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="property sweep over a box of parameters")
    p.add_argument("--max-n1", type=int, default=50)
    p.add_argument("--max-n2", type=int, default=50)
    p.add_argument("--jobs", type=int, default=jobs_default)
    fmt(p, "text")
    p.set_defaults(func=cmd_selftest)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    """Attach negative values such as '-3/2' to their flag so argparse accepts them."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEG_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_normalize_argv(argv))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
