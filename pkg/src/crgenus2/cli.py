"""Command-line front end.

    crgenus2 sectors --space stable --n 0 [--json]
    crgenus2 ages --g 2 --n 1
    crgenus2 equivariant --n 5 --group "1,0,2,3,4;1,2,0,3,4" [--compact]
    crgenus2 series --space stable --max-n 4 [--graded] [--compare]
    crgenus2 excess --n 1 | --consistency
    crgenus2 verify {all,counts,series,ages,poincare,excess,keel}
    crgenus2 export {sectors,ages,doubles,traces} {json,csv} PATH

Exit status: 0 on success, 1 when a verification item fails, 2 on error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from math import factorial, prod
from pathlib import Path

from . import reference as R
from .admissible import enumerate_sectors, sector_record
from .algebra import FracPoly, TruncatedEGF, fmt_fraction
from .catalog import NODE_RULES, full_catalog, sector_ages_table
from .config import RunConfig
from .excess import check_fiber_products, classify_class, degree_consistency, double_catalog
from .genus0 import canonical_perm, graded_trace_compact, graded_trace_open, invariant_poincare, partitions_of
from .series import (SPACES, closed_form_eval, compare_polys, compare_series, correction_series, input_series)
from .verify import SCOPES, exit_code, run

EXPORT_KINDS = ("sectors", "ages", "doubles", "traces")
FORMATS = ("json", "csv")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _betti(p: FracPoly) -> list:
    return [int(p.coeff(k)) for k in range(int(max(p.exponents(), default=-1)) + 1)]


# ---------------------------------------------------------------------------
# Commands


def cmd_sectors(args, cfg: RunConfig) -> int:
    entries = full_catalog(args.space, args.n, cfg.node_rule)
    if args.json:
        print(_dump({"space": args.space, "g": 2, "n": args.n, "entries": [e.record() for e in entries]}), end="")
        return 0
    print(f"{'name':40} {'age':>6} {'dim':>4} {'h':>4}  cohomology")
    for e in entries:
        print(f"{e.name:40} {fmt_fraction(e.age):>6} {e.dim:>4} {e.h:>4}  {e.cohomology}")
    print(f"{len(entries)} sectors, total {sum(e.h for e in entries)}")
    return 0


def cmd_ages(args, cfg: RunConfig) -> int:
    if args.g != 2:
        raise ValueError("ages are tabulated for g = 2 only")
    rows = sector_ages_table(args.n)
    if args.json:
        print(_dump([_age_row(r) for r in rows]), end="")
        return 0
    print(f"{'name':20} {'dim':>4} {'codim':>6} {'age':>6}  inverse")
    for r in rows:
        print(f"{r['name']:20} {r['dim']:>4} {r['codim']:>6} {fmt_fraction(r['age']):>6}  {r['dual']}")
    return 0


def _age_row(r: dict) -> dict:
    return {"name": r["name"], "dim": r["dim"], "codim": r["codim"], "age": fmt_fraction(r["age"]),
            "inverse": r["dual"]}


def _parse_group(text: str, n: int) -> list:
    gens = []
    for chunk in text.split(";"):
        perm = tuple(int(x) for x in chunk.split(","))
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{chunk!r} is not a permutation of 0..{n - 1}")
        gens.append(perm)
    return gens


def cmd_equivariant(args, cfg: RunConfig) -> int:
    gens = _parse_group(args.group, args.n) if args.group else [tuple(range(args.n))]
    inv = invariant_poincare(args.n, gens, compact=args.compact)
    if args.json:
        print(_dump({"n": args.n, "compact": args.compact, "generators": [list(g) for g in gens],
                     "invariant": list(inv), "traces": trace_table(args.n)}), end="")
    else:
        print(" ".join(map(str, inv)))
    return 0


def trace_table(n: int) -> list:
    rows = []
    for ctype in partitions_of(n):
        perm = canonical_perm(ctype)
        mult = Counter(ctype)
        size = factorial(n) // prod(k ** m * factorial(m) for k, m in mult.items())
        row = {"cycle_type": list(ctype), "class_size": size, "open": list(graded_trace_open(n, perm))}
        if n >= 3:
            row["compact"] = list(graded_trace_compact(n, perm))
        rows.append(row)
    return rows


def cmd_series(args, cfg: RunConfig) -> int:
    computed = correction_series(args.space, args.max_n, args.graded, cfg.node_rule)
    reports = []
    if args.compare:
        reports = _series_reports(args.space, computed, args.max_n, args.graded)
    if args.json:
        doc = {"space": args.space, "graded": args.graded, "coefficients": [str(c) for c in computed.coeffs],
               "comparisons": [r.record() for r in reports]}
        print(_dump(doc), end="")
    else:
        for n, c in enumerate(computed.coeffs):
            print(f"n={n}: {c}")
        for r in reports:
            print(r.format())
    return 1 if any(not r.passed for r in reports) else 0


def _series_reports(space: str, computed: TruncatedEGF, max_n: int, graded: bool) -> list:
    if graded:
        if space == "smooth":
            return [compare_polys(f"smooth n={n}", computed[n], R.SMOOTH_GRADED[n], n)
                    for n in range(min(max_n + 1, len(R.SMOOTH_GRADED)))]
        if space == "stable":
            twisted = R.STABLE_ORBIFOLD_POINCARE - R.STABLE_POINCARE
            return [compare_polys("stable n=0", computed[0], twisted, 0)]
        return []
    if space == "smooth":
        top = min(max_n, len(R.CORRECTIONS) - 1)
        expected = TruncatedEGF(top, tuple(FracPoly.from_coeffs([c]) for c in R.CORRECTIONS[: top + 1]))
        return [compare_series("smooth corrections", computed, expected, max_n=top)]
    if space == "rt":
        return [compare_series("rational-tails series", computed,
                               closed_form_eval(R.RT_FORM, input_series(max_n, with_p1=False)))]
    top = min(max_n, 4)
    return [compare_series("stable series", computed, closed_form_eval(R.STABLE_FORM, input_series(top)), max_n=top)]


def cmd_excess(args, cfg: RunConfig) -> int:
    if args.consistency:
        reports = [degree_consistency(), check_fiber_products()]
        if args.json:
            print(_dump([r.record() for r in reports]), end="")
        else:
            for r in reports:
                print(r.format())
        return 0 if all(r.passed for r in reports) else 1
    rows = [d.record() for d in double_catalog(args.n)]
    if args.json:
        print(_dump(rows), end="")
        return 0
    for r in rows:
        print(f"{r['family']:9} {' | '.join(r['slots']):60} ages {','.join(r['ages']):12} "
              f"rank {r['rank']}  {r['class']}")
    counts = Counter(r["class"] if r["class"] in ("One", "Zero") else "symbolic" for r in rows)
    print(f"{len(rows)} double sectors: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    items = run(args.scope, cfg)
    if args.json:
        print(_dump([i.record() for i in items]), end="")
    else:
        for i in items:
            print(i.format())
        tally = Counter(i.status for i in items)
        print(f"{tally['pass']} pass, {tally['fail']} fail, {tally['flagged']} flagged")
        for i in items:
            if i.status == "flagged":
                print(f"FLAGGED: {i.id} computed {i.computed}, expected {i.expected}")
    return exit_code(items)


# ---------------------------------------------------------------------------
# Export


def export_rows(kind: str, g: int, n: int, cfg: RunConfig):
    """(json document, csv header, csv rows)."""
    if kind == "sectors":
        recs = [sector_record(s) for s in enumerate_sectors(g, n)]
        header = ["name", "gq", "N", "d", "a", "alpha", "dim"]
        return {"g": g, "n": n, "sectors": recs}, header, recs
    if kind == "ages":
        if g != 2:
            raise ValueError("ages are tabulated for g = 2 only")
        recs = [_age_row(r) for r in sector_ages_table(n)]
        return {"g": g, "n": n, "ages": recs}, ["name", "dim", "codim", "age", "inverse"], recs
    if kind == "doubles":
        recs = [d.record() for d in double_catalog(n)]
        return {"n": n, "doubles": recs}, ["family", "slots", "dim_y", "ages", "rank", "class"], recs
    if kind == "traces":
        recs = trace_table(n)
        return {"n": n, "traces": recs}, ["cycle_type", "class_size", "open", "compact"], recs
    raise ValueError(f"unknown export kind {kind!r}")


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return str(v)


def render_export(kind: str, fmt: str, g: int, n: int, cfg: RunConfig) -> str:
    doc, header, recs = export_rows(kind, g, n, cfg)
    if fmt == "json":
        return _dump(doc)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in recs:
        writer.writerow([_cell(r.get(h, "")) for h in header])
    return buf.getvalue()


def cmd_export(args, cfg: RunConfig) -> int:
    path = args.out or args.path
    if path is None:
        raise ValueError("export needs a path")
    text = render_export(args.kind, args.format, args.g, args.n, cfg)
    Path(path).write_text(text, encoding="utf-8")
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crgenus2", description="Orbifold cohomology of pointed genus-2 moduli.")
    ap.add_argument("--data", help="directory holding the genus-1 tables (overrides $CRGENUS2_DATA)")
    ap.add_argument("--node-rule", choices=NODE_RULES, default=None, help="weights at loop nodes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sectors", help="list twisted sectors")
    p.add_argument("--space", choices=SPACES, default="smooth")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("ages", help="dim, codim and age per sector")
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ages)

    p = sub.add_parser("equivariant", help="invariant Betti numbers of the genus-0 space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", default="", help="generators as 0-based images, separated by ';'")
    p.add_argument("--compact", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser("series", help="correction series")
    p.add_argument("--space", choices=SPACES, default="stable")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--graded", action="store_true")
    p.add_argument("--compare", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("excess", help="double sectors with excess ranks and classes")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--consistency", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_excess)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("scope", nargs="?", choices=SCOPES, default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a table as JSON or CSV")
    p.add_argument("kind", choices=EXPORT_KINDS)
    p.add_argument("format", choices=FORMATS)
    p.add_argument("path", nargs="?")
    p.add_argument("--out")
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_env(data_dir=args.data, node_rule=args.node_rule,
                                 max_n=getattr(args, "max_n", None) if args.command == "verify" else None)
        cfg.apply()
        return args.func(args, cfg)
    except (OSError, ValueError, KeyError, ArithmeticError) as exc:
        print(f"crgenus2: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
