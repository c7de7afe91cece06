"""Command-line front end.

Examples::

    skewz4 analyze "3+x" --n 4 --free --select gray res tor plotkin
    skewz4 verify --format json --report verify.json
    skewz4 search --n 4 --degree 1 --free --exhaustive --select gray
    skewz4 ideals
    skewz4 center-check "2+x^2"

Exit status: 0 success / all rows pass, 1 a row failed or a computation
raised, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, kernels
from .analysis import SELECTORS, analyze, verify
from .cyclic import DEFAULT_SPAN_BOUND
from .errors import PolySyntaxError, SkewZ4Error
from .poly import commutation_witness, is_central
from .ring import DerivationKind, format_elem, nontrivial_ideals
from .search import SearchConfig, SearchStats, search
from .textform import parse_poly, render_poly
from .z4 import DEFAULT_CODEWORD_BOUND

EXPORT_COLUMNS = ("n", "k1", "k2", "dL", "generator", "kind", "selector")


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    """``4``, ``4-6`` or ``4,6,8``; an empty string gives an empty tuple."""
    text = text.strip()
    if not text:
        return ()
    out: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def _kind(text: str) -> DerivationKind:
    try:
        return DerivationKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _records_out(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(EXPORT_COLUMNS), extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(r)
    else:
        for r in records:
            out.write(
                f"{r['selector']:8s} [{r['n']}, 4^{r['k1']} 2^{r['k2']}, {r['dL']}]  "
                f"{r['generator']}  ({r['kind']})\n"
            )


def cmd_analyze(args, out) -> int:
    kind = args.derivation
    g = parse_poly(args.poly, kind)
    if args.free == (args.k is not None):
        raise UsageError("give exactly one of --free or --k K")
    k = "free" if args.free else args.k
    report = analyze(
        g,
        args.n,
        k,
        selectors=args.select,
        plotkin_operand=args.plotkin_operand,
        bound=args.bound,
        span_bound=args.span_bound,
    )
    if args.format == "json":
        json.dump(report.as_dict(), out, indent=2)
        out.write("\n")
        return 0
    records = [
        {**p.as_dict(), "generator": report.generator, "kind": kind.value, "selector": sel}
        for sel, p in report.params.items()
    ]
    if args.format == "csv":
        _records_out(records, "csv", out)
        return 0
    out.write(f"g(x) = {report.generator}   n = {args.n}   k = {k}   derivation = {kind.value}\n")
    for sel, p in report.params.items():
        out.write(f"  {sel:8s} {p}\n")
    if report.right_divisor is not None:
        out.write(f"  right divisor of x^{args.n}-1: {'yes' if report.right_divisor else 'no'}\n")
    if report.cofactor is not None:
        out.write(f"  cofactor h(x) = {report.cofactor} (central: {report.cofactor_central})\n")
    if report.closure is not None:
        flags = ", ".join(f"{k_}={v}" for k_, v in report.closure.items())
        out.write(f"  closure: {flags}\n")
    for note in report.notes:
        out.write(f"  note: {note}\n")
    return 0


def cmd_verify(args, out) -> int:
    report = verify(args.manifest, bound=args.bound)
    data = report.as_dict()
    if args.report:
        Path(args.report).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    if args.format == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["label", "selector", "expected", "computed", "status"])
        for r in report.rows:
            w.writerow([r.label, r.selector, str(r.expected), str(r.computed or ""), r.status])
    else:
        for r in report.rows:
            got = str(r.computed) if r.computed else (r.error or "")
            out.write(f"{r.status:5s} {r.label:8s} {r.selector:8s} expected {r.expected}  got {got}\n")
        s = report.summary
        out.write(f"{s['pass']}/{s['total']} PASS, {s['fail']} FAIL, {s['error']} ERROR\n")
    return 0 if report.ok else 1


def cmd_search(args, out) -> int:
    if args.free and args.k:
        raise UsageError("give at most one of --free or --k")
    k_values = ("free",) if args.free or not args.k else _int_list(args.k)
    config = SearchConfig(
        n_values=_int_list(args.n),
        degrees=_int_list(args.degree),
        k_values=k_values,
        kind=args.derivation,
        seed=args.seed,
        samples=None if args.exhaustive else args.samples,
        bound=args.bound,
        selectors=tuple(args.select),
        plotkin_operand=args.plotkin_operand,
    )
    stats = SearchStats()
    records = [r.as_dict() for r in search(config, stats=stats)]
    _records_out(records, args.format, out)
    logging.getLogger(__name__).info(
        "visited %d candidates, %d evaluated, %d skipped, %d failed, %d emitted",
        stats.visited, stats.evaluated, stats.skipped, stats.failed, stats.emitted,
    )
    return 0


def cmd_ideals(args, out) -> int:
    ideals = nontrivial_ideals()
    if args.format == "json":
        json.dump(
            [{"generator": format_elem(i.generator), "elements": [format_elem(e) for e in i.sorted_elements()]} for i in ideals],
            out,
            indent=2,
        )
        out.write("\n")
        return 0
    for i in ideals:
        elems = ", ".join(format_elem(e) for e in i.sorted_elements())
        out.write(f"<{format_elem(i.generator)}> = {{{elems}}}  ({len(i)} elements)\n")
    return 0


def cmd_center_check(args, out) -> int:
    f = parse_poly(args.poly, args.derivation)
    central = is_central(f)
    witness = commutation_witness(f)
    result = {
        "poly": render_poly(f),
        "central": central,
        "witness": render_poly(witness) if witness is not None else None,
    }
    if args.format == "json":
        json.dump(result, out, indent=2)
        out.write("\n")
    else:
        line = f"{result['poly']}: {'central' if central else 'not central'}"
        if witness is not None:
            line += f" (does not commute with {result['witness']})"
        out.write(line + "\n")
    if central != (witness is None):
        out.write("internal inconsistency between coefficient test and witness test\n")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewz4", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({kernels.BACKEND} kernel)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="text"):
        sp.add_argument("--derivation", type=_kind, default=DerivationKind.UNIT_1_PLUS_2V, help="1+2v or 3+2v")
        sp.add_argument("--bound", type=int, default=DEFAULT_CODEWORD_BOUND, help="max codewords to enumerate")
        sp.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)

    a = sub.add_parser("analyze", help="parameters of codes derived from one generator")
    a.add_argument("poly")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--k", type=int, help="subcode size: span of g, xg, ..., x^(k-1)g")
    a.add_argument("--free", action="store_true", help="free code <g> from a right divisor of x^n-1")
    a.add_argument("--select", nargs="+", choices=SELECTORS, default=list(SELECTORS))
    a.add_argument("--plotkin-operand", choices=("res", "tor"), default="res")
    a.add_argument("--span-bound", type=int, default=DEFAULT_SPAN_BOUND)
    common(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="recompute every row of a verification manifest")
    v.add_argument("--manifest", default=None, help="defaults to the shipped manifest")
    v.add_argument("--report", default=None, help="also write the JSON report here")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search generator polynomials for good codes")
    s.add_argument("--n", required=True, help="length(s): 4, 4-8 or 4,6")
    s.add_argument("--degree", required=True, help="generator degree(s), same syntax")
    s.add_argument("--k", default="", help="subcode sizes; omit or use --free for free codes")
    s.add_argument("--free", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--samples", type=int, default=1000)
    g.add_argument("--exhaustive", action="store_true")
    s.add_argument("--select", nargs="+", choices=SELECTORS, default=list(SELECTORS))
    s.add_argument("--plotkin-operand", choices=("res", "tor"), default="res")
    common(s)
    s.set_defaults(func=cmd_search)

    i = sub.add_parser("ideals", help="list the seven nontrivial ideals of Z4+vZ4")
    i.add_argument("--format", choices=("text", "json"), default="text")
    i.set_defaults(func=cmd_ideals)

    c = sub.add_parser("center-check", help="is a polynomial central in R[x; theta, delta]?")
    c.add_argument("poly")
    c.add_argument("--derivation", type=_kind, default=DerivationKind.UNIT_1_PLUS_2V)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_center_check)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except (PolySyntaxError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SkewZ4Error, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
