"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for invalid input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bijection import (
    FIGURES,
    DomainError,
    SourcePair,
    SplitPair,
    audit_bijection,
    classic_report,
    trace_split,
    unsplit,
)
from .derivations import partial_theta_recipe, rewriting_chain
from .diagram import render_diagram, render_split
from .identities import IDENTITIES, build_side, get_identity
from .involution import Triple, a_exponent, audit_involution, involution, involution_case
from .partitions import PartitionError, format_partition, parse_partition
from .report import DEFAULT_MAX_COUNTEREXAMPLES, Check, Report
from .series import SeriesError, Window, compare, to_tsv

class UsageError(Exception):
    pass


# BudgetError is a SeriesError; every validation failure maps to exit code 2.
USAGE_ERRORS = (UsageError, PartitionError, SeriesError, DomainError, ValueError)


def _window_args(p: argparse.ArgumentParser, qmax: int = 10) -> None:
    g = p.add_argument_group("window")
    g.add_argument("--qmax", type=int, default=qmax)
    g.add_argument("--amin", type=int, default=0)
    g.add_argument("--amax", type=int, default=0)
    g.add_argument("--bmax", type=int, default=0)
    g.add_argument("--cmax", type=int, default=0)


def _report_args(p: argparse.ArgumentParser, default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "tsv", "text"), default=default)
    p.add_argument("--max-counterexamples", type=int, default=DEFAULT_MAX_COUNTEREXAMPLES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qverify", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qverify {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="expand both sides of an identity and compare")
    p.add_argument("--identity", required=True)
    _window_args(p)
    _report_args(p)
    p.add_argument("--dump", choices=("diff", "lhs", "rhs"), default="diff",
                   help="series written by --format tsv")

    p = sub.add_parser("audit-involution", help="exhaustive audit of the involution on triples")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--no-series", action="store_true", help="skip generating-series checks")
    _report_args(p)

    p = sub.add_parser("audit-bijection", help="exhaustive audit of the add-and-split bijection")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--length-cap", type=int, required=True)
    p.add_argument("--no-series", action="store_true")
    _report_args(p)

    p = sub.add_parser("classic-check", help="staircase of equal length: the classic bijection")
    p.add_argument("--weight", type=int, required=True, help="largest n")
    p.add_argument("--length-cap", type=int, required=True, help="largest k")
    _report_args(p)

    p = sub.add_parser("derive", help="check an algebraic derivation chain step by step")
    p.add_argument("--chain", choices=("rewrite", "partial-theta"), required=True)
    p.add_argument("--qmax", type=int, default=8)
    p.add_argument("--amax", type=int, default=6)
    p.add_argument("--cmax", type=int, default=8)
    _report_args(p)

    p = sub.add_parser("trace", help="show one application of a map")
    tsub = p.add_subparsers(dest="map", required=True)
    t = tsub.add_parser("psi")
    t.add_argument("--lambda", dest="lam", default="")
    t.add_argument("--mu", default="")
    t.add_argument("--gamma", default="")
    t = tsub.add_parser("phi")
    t.add_argument("--lambda", dest="lam", default="")
    t.add_argument("--mu", default="")
    t = tsub.add_parser("phi-inverse")
    t.add_argument("--x", default="")
    t.add_argument("--y", default="")
    t.add_argument("--tag", choices=("a1", "a2", "A1", "A2"), required=True)

    p = sub.add_parser("diagram", help="ASCII Ferrers diagram")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--figure", type=int, choices=sorted(FIGURES))
    p.add_argument("--overlay")

    p = sub.add_parser("list-identities")
    p.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    return parser


def _emit(report: Report, args, out) -> int:
    report.config.setdefault("max_counterexamples", args.max_counterexamples)
    if args.format == "json":
        out.write(report.to_json(args.max_counterexamples))
    elif args.format == "tsv":
        out.write(report.to_tsv())
    else:
        out.write(report.to_text())
    return report.exit_code()


def _window(args) -> Window:
    return Window(args.qmax, args.amin, args.amax, args.bmax, args.cmax)


def run_verify(args, out) -> int:
    ident = get_identity(args.identity)
    w = _window(args)
    lhs = build_side(ident.id, "LHS", w)
    rhs = build_side(ident.id, "RHS", w)
    cmp = compare(lhs, rhs, w)
    report = Report(
        "verify",
        {
            "identity": ident.id,
            "window": w.as_dict(),
            "max_counterexamples": args.max_counterexamples,
        },
    )
    report.add(Check.from_comparison(f"{ident.id}: LHS = RHS", cmp, expected=ident.holds, note=ident.notes))
    report.totals.update(
        {"lhs_terms": len(lhs), "rhs_terms": len(rhs), "monomials_compared": cmp.monomials_compared,
         "mismatches": len(cmp.mismatches)}
    )
    if args.format == "tsv":
        series = {"lhs": lhs, "rhs": rhs, "diff": lhs - rhs}[args.dump]
        out.write(to_tsv(series))
        return report.exit_code()
    return _emit(report, args, out)


def _fmt(p) -> str:
    return "(" + format_partition(p) + ")" if p else "∅"


def trace_text(args) -> str:
    lines = []
    if args.map == "psi":
        t = Triple(parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.gamma))
        case = involution_case(t)
        s = involution(t)
        lines.append(f"input:  lambda={_fmt(t.lam)} mu={_fmt(t.mu)} gamma={_fmt(t.gamma)}")
        lines.append(f"case {case}" + (": fixed point" if case == 1 else ""))
        lines.append(f"output: lambda={_fmt(s.lam)} mu={_fmt(s.mu)} gamma={_fmt(s.gamma)}")
        lines.append(f"weight {t.weight} -> {s.weight}")
        lines.append(f"len(lambda)+len(gamma) {t.b_exponent} -> {s.b_exponent}")
        lines.append(f"sign {t.sign:+d} -> {s.sign:+d}")
        lines.append(f"f {a_exponent(t)} -> {a_exponent(s)}")
    elif args.map == "phi":
        p = SourcePair(parse_partition(args.lam), parse_partition(args.mu))
        tr = trace_split(p)
        r = tr["result"]
        lines.append(f"input:  lambda={_fmt(p.lam)} mu={_fmt(p.mu)}")
        lines.append(f"k = min({p.lam.length}, {p.mu.length}) = {tr['k']}")
        lines.append(f"lambda+mu = {_fmt(tr['sum'])}")
        lines.append(f"output: X={_fmt(r.x)} Y={_fmt(r.y)} tag {r.tag}")
        lines.append(f"weight {p.weight} -> {r.weight}")
        lines.append(f"len(X)+len(Y) = {r.x.length + r.y.length}, len(X) = {r.x.length}")
    else:
        s = SplitPair(parse_partition(args.x), parse_partition(args.y), args.tag.upper())
        p = unsplit(s)
        lines.append(f"input:  X={_fmt(s.x)} Y={_fmt(s.y)} tag {s.tag}")
        n = s.x.length if s.tag == "A1" else s.x.length + s.y.length
        lines.append(f"staircase length {n}")
        lines.append(f"output: lambda={_fmt(p.lam)} mu={_fmt(p.mu)}")
        lines.append(f"weight {s.weight} -> {p.weight}")
    return "\n".join(lines) + "\n"


def list_identities(fmt: str) -> str:
    rows = []
    for ident in IDENTITIES.values():
        rows.append({
            "id": ident.id,
            "location": ident.location,
            "notes": ident.notes,
            "holds": ident.holds,
            "minimal_window": ident.minimal_window,
        })
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if fmt == "tsv":
        return "".join(f"{r['id']}\t{r['location']}\t{r['notes']}\n" for r in rows)
    return "".join(
        f"{r['id']:<22}{'' if r['holds'] else '[printed, fails] '}{r['location']}\n{'':<22}{r['notes']}\n"
        for r in rows
    )


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args, out)
        if args.command == "audit-involution":
            if args.weight < 0:
                raise UsageError("--weight must be non-negative")
            return _emit(audit_involution(args.weight, series=not args.no_series), args, out)
        if args.command == "audit-bijection":
            if args.weight < 0 or args.length_cap < 0:
                raise UsageError("--weight and --length-cap must be non-negative")
            return _emit(audit_bijection(args.weight, args.length_cap, series=not args.no_series), args, out)
        if args.command == "classic-check":
            return _emit(classic_report(args.weight, args.length_cap), args, out)
        if args.command == "derive":
            if args.chain == "rewrite":
                report = rewriting_chain(args.qmax, args.amax, args.cmax)
            else:
                report = partial_theta_recipe(args.qmax, args.amax)
            return _emit(report, args, out)
        if args.command == "trace":
            out.write(trace_text(args))
            return 0
        if args.command == "diagram":
            if args.figure is not None:
                out.write(render_split(FIGURES[args.figure][0]))
            else:
                p = parse_partition(args.partition)
                ov = parse_partition(args.overlay) if args.overlay is not None else None
                out.write(render_diagram(p, ov))
            return 0
        if args.command == "list-identities":
            out.write(list_identities(args.format))
            return 0
    except USAGE_ERRORS as exc:
        print(f"qverify: error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unhandled command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
