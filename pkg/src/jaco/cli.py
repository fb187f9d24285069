"""``jaco`` command line.

Exit status: 0 when everything ran and our formulas agree with our oracles,
1 on an internal inconsistency, 2 on a usage error.  Disagreement with a
printed value alone never changes the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify
from .graph import GraphError, format_edge_list, parse_edge_list
from .jacograph import build_jaco
from .report import graph_report, jaco_report, rows_to_csv, rows_to_json, sequence_rows

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected n >= 1, got {n}")
    return n


def _checks(text: str) -> tuple[str, ...]:
    names = tuple(c.strip() for c in text.split(",") if c.strip())
    unknown = [c for c in names if c not in verify.CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown check(s) {unknown}; choose from {', '.join(verify.CHECKS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jaco", description="Invariants of finite Jaco graphs J_n(1).")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="render J_n(1)")
    b.add_argument("n", type=_positive)
    b.add_argument("--directed", action="store_true")
    b.add_argument("--format", choices=("dot", "json", "edgelist"), default="edgelist")

    inv = sub.add_parser("invariants", help="invariant table for J_n(1) or an edge-list file")
    src = inv.add_mutually_exclusive_group(required=True)
    src.add_argument("n", nargs="?", type=_positive)
    src.add_argument("--edges", type=Path, metavar="FILE")
    inv.add_argument("--with-bondage", action="store_true")
    inv.add_argument("--with-oracles", action="store_true")
    inv.add_argument("--json", action="store_true", help="emit the report as JSON only")

    t = sub.add_parser("paper-table", help="murtage table and published gamma-set data for J_1..J_13")
    t.add_argument("--from", dest="lo", type=_positive, default=1)
    t.add_argument("--to", dest="hi", type=_positive, default=13)
    t.add_argument("--json", action="store_true", help="records as JSON lines")

    v = sub.add_parser("verify", help="run checks over J_a..J_b")
    v.add_argument("--from", dest="lo", type=_positive, required=True)
    v.add_argument("--to", dest="hi", type=_positive, required=True)
    v.add_argument("--checks", type=_checks, default=verify.CHECKS)
    v.add_argument("--json", action="store_true", help="records as JSON lines")

    e = sub.add_parser("export", help="invariant sequences as CSV or JSON")
    e.add_argument("--from", dest="lo", type=_positive, required=True)
    e.add_argument("--to", dest="hi", type=_positive, required=True)
    e.add_argument("--to-format", choices=("csv", "json"), default="csv")
    e.add_argument("--out", type=Path)
    e.add_argument("--with-bondage", action="store_true")
    return p


def _emit(records: list[verify.VerificationRecord], as_json: bool, out) -> None:
    for r in records:
        print(r.to_json() if as_json else r.line(), file=out)


def cmd_build(args, out) -> int:
    jg = build_jaco(args.n)
    if args.format == "dot":
        print(jg.to_dot(directed=args.directed), file=out)
    elif args.format == "json":
        print(jg.to_json(), file=out)
    else:
        print(format_edge_list(jg.underlying), file=out)
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    if args.edges is not None:
        g = parse_edge_list(args.edges.read_text())
        rep = graph_report(g, args.edges.name, with_oracles=args.with_oracles,
                           with_bondage=args.with_bondage)
    else:
        rep = jaco_report(args.n, with_oracles=args.with_oracles, with_bondage=args.with_bondage)
    print(rep.to_json() if args.json else rep.table() + "\n" + rep.to_json(), file=out)
    return EXIT_INCONSISTENT if rep.mismatches() else EXIT_OK


def cmd_claim_table(args, out) -> int:
    if args.lo > args.hi:
        raise GraphError("--from must not exceed --to")
    records = verify.claim_table_records(args.lo, args.hi)
    if not args.json:
        header = ("n", "m(theorem)", "m(oracle)", "claimed m", "verdict", "d_om", "claimed d_om")
        rows = [header]
        by_n: dict[str, dict[str, verify.VerificationRecord]] = {}
        for r in records:
            by_n.setdefault(r.graph, {})[r.claim_id] = r
        for n in range(args.lo, args.hi + 1):
            recs = by_n.get(f"J_{n}", {})
            m = recs.get("sec2.4-murtage-table")
            s = recs.get("sec2.4-dom-sequence")
            if m is None:
                continue
            rows.append((
                str(n), str(m.computed.get("theorem", "")), str(m.computed.get("oracle", "")),
                str(m.paper_value), m.verdict,
                str(tuple(s.computed["dom_sequence"])) if s else "",
                str(tuple(s.paper_value)) if s else "",
            ))
        width = [max(len(r[i]) for r in rows) for i in range(len(header))]
        for r in rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, width)).rstrip(), file=out)
        print(file=out)
    _emit(records, args.json, out)
    return EXIT_INCONSISTENT if verify.any_inconsistent(records) else EXIT_OK


def cmd_verify(args, out) -> int:
    if args.lo > args.hi:
        raise GraphError("--from must not exceed --to")
    records = verify.verify_range(args.lo, args.hi, args.checks)
    _emit(records, args.json, out)
    if not args.json:
        tally = {k: sum(r.verdict == k for r in records)
                 for k in (verify.AGREE, verify.DISAGREE, verify.OUT_OF_BUDGET)}
        print(json.dumps(tally), file=out)
    return EXIT_INCONSISTENT if verify.any_inconsistent(records) else EXIT_OK


def cmd_export(args, out) -> int:
    if args.lo > args.hi:
        raise GraphError("--from must not exceed --to")
    rows = sequence_rows(args.lo, args.hi, with_bondage=args.with_bondage)
    text = rows_to_csv(rows) if args.to_format == "csv" else rows_to_json(rows) + "\n"
    if args.out is None:
        out.write(text)
        return EXIT_OK
    args.out.write_text(text)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "invariants": cmd_invariants,
    "paper-table": cmd_claim_table,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (GraphError, OSError) as exc:
        print(f"jaco: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
