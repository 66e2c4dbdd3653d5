"""Command-line interface.

Usage:
    zdg check 15 --both
    zdg tour 15
    zdg degrees 963761198400
    zdg build 12 --dot z12.dot
    zdg sweep 4 50 --csv sweep.csv
    zdg audit CLASS-FINAL --max 200 --json audit.json

JSON is the machine-readable output. Exit codes: 0 ok, 1 usage or domain
error, 2 no zero divisors (n prime), 3 graph too large to materialise,
4 no Euler circuit/trail, 5 internal inconsistency.
"""
from __future__ import annotations

import argparse
import sys

from zdg import audit as au
from zdg import io as zio
from zdg import quotient as qt
from zdg.convention import ENV_VAR, Convention
from zdg.errors import InconsistencyError, ZDGError
from zdg.eulerian import (
    euler_verdict_explicit,
    euler_verdict_fast,
    find_euler_circuit,
    find_euler_trail,
    validate_tour,
)
from zdg.explicit import build_graph, to_dict, to_dot


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_convention(p):
    p.add_argument(
        "--convention",
        choices=[c.value for c in Convention],
        default=None,
        help=f"self-loop convention (default: ${ENV_VAR} or noloops)",
    )


def _add_mode(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fast", dest="mode", action="store_const", const="fast", help="divisor classes (default)")
    g.add_argument("--oracle", dest="mode", action="store_const", const="oracle", help="explicit graph")
    g.add_argument("--both", dest="mode", action="store_const", const="both", help="run both and compare")
    p.set_defaults(mode="fast")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zdg", description="Zero-divisor graphs of Z_n and their Euler tours.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="materialise Gamma(Z_n)")
    p.add_argument("n", type=int)
    _add_convention(p)
    p.add_argument("--dot", metavar="PATH", help="write DOT here (default: stdout)")
    p.add_argument("--json", metavar="PATH", help="write the graph as JSON")
    p.add_argument("--quotient", action="store_true", help="emit the divisor-class graph as JSON instead")

    p = sub.add_parser("degrees", help="degree of every divisor class")
    p.add_argument("n", type=int)
    _add_convention(p)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("check", help="Euler circuit / trail verdict")
    p.add_argument("n", type=int)
    _add_convention(p)
    p.add_argument("--reading", choices=["circuit", "trail"], default="circuit")
    _add_mode(p)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("tour", help="print a validated Euler circuit (or trail)")
    p.add_argument("n", type=int)
    _add_convention(p)
    p.add_argument("--trail", action="store_true", help="accept an open trail")
    p.add_argument("--json", metavar="PATH", help="write the vertex sequence as a JSON array")

    p = sub.add_parser("sweep", help="one CSV row per composite n in a range")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    _add_convention(p)
    _add_mode(p)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("audit", help="check claims against computed ground truth")
    p.add_argument("claim", help="claim id (e.g. THM-4.1, CLASS-FINAL) or 'all'")
    _add_convention(p)
    p.add_argument("--reading", choices=["circuit", "trail"], default="circuit")
    p.add_argument("--max", dest="n_max", type=int, default=200, help="largest n for CLASS-FINAL")
    p.add_argument("--pmax", type=int, default=13, help="largest prime in claim instances")
    p.add_argument("--emax", type=int, default=4, help="largest exponent in claim instances")
    p.add_argument("--oracle-limit", type=int, default=au.ORACLE_MAX_VERTICES)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")
    return parser


def _text(d: dict) -> str:
    width = max(map(len, d))
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in d.items())


def cmd_build(args, conv, out):
    if args.quotient:
        zio.emit(zio.dumps_json(qt.build_quotient(args.n).to_dict()), args.json, out)
        return 0
    g = build_graph(args.n, conv)
    if args.json:
        zio.emit(zio.dumps_json(to_dict(g)), args.json, out)
    if args.dot or not args.json:
        zio.emit(to_dot(g), args.dot, out)
    return 0


def cmd_degrees(args, conv, out):
    prof = qt.degree_profile(args.n, conv)
    if args.format == "text" and not args.json:
        lines = [f"{'d':>8} {'size':>8} {'degree':>8} parity"]
        lines += [f"{e.d:>8} {e.size:>8} {e.degree:>8} {e.parity}" for e in prof.entries]
        out.write("\n".join(lines) + f"\nall_even: {prof.all_even}\n")
    else:
        zio.emit(zio.dumps_json(prof.to_dict()), args.json, out)
    return 0


def cmd_check(args, conv, out):
    if args.mode == "oracle":
        verdict = euler_verdict_explicit(build_graph(args.n, conv))
    else:
        verdict = euler_verdict_fast(args.n, conv)
        if args.mode == "both":
            slow = euler_verdict_explicit(build_graph(args.n, conv))
            if slow != verdict:
                raise InconsistencyError(
                    f"fast {verdict.to_dict()} != oracle {slow.to_dict()}"
                )
    doc = verdict.to_dict()
    doc["reading"] = args.reading
    doc["eulerian"] = au.holds(verdict, au.Reading(args.reading))
    doc["mode"] = args.mode
    if args.format == "text" and not args.json:
        out.write(_text(doc))
    else:
        zio.emit(zio.dumps_json(doc), args.json, out)
    return 0


def cmd_tour(args, conv, out):
    g = build_graph(args.n, conv)
    tour = find_euler_trail(g) if args.trail else find_euler_circuit(g)
    check = validate_tour(g, tour)
    if not check:
        raise InconsistencyError(f"constructed tour failed validation: {check.diagnostic}")
    if args.json:
        zio.emit(zio.dumps_json(tour.to_list()), args.json, out)
    else:
        out.write(str(tour) + "\n")
    return 0


def cmd_sweep(args, conv, out):
    rows = zio.sweep(args.n_min, args.n_max, conv, args.mode, args.jobs)
    zio.emit(zio.sweep_csv(rows), args.csv, out)
    return 0


def cmd_audit(args, conv, out):
    claims = list(au.ClaimId) if args.claim.lower() == "all" else [au.ClaimId.parse(args.claim)]
    records = []
    doc: dict = {}
    for c in claims:
        inst = au.default_instances(c, args.pmax, args.emax, args.n_max)
        records += au.audit_claim(c, inst, conv, args.reading, args.oracle_limit)
        if c is au.ClaimId.CLASS_FINAL:
            doc["classification"] = au.audit_classification(
                args.n_max, conv, args.reading, args.oracle_limit
            ).to_dict()
    doc["summary"] = {
        c.value: {
            "records": sum(r.claim is c for r in records),
            "agree": sum(r.claim is c and r.agrees for r in records),
        }
        for c in claims
    }
    doc["records"] = [r.to_dict() for r in records]
    if args.csv:
        zio.emit(zio.audit_csv(records), args.csv, out)
    if args.json or not args.csv:
        zio.emit(zio.dumps_json(doc), args.json, out)
    return 0


_COMMANDS = {
    "build": cmd_build,
    "degrees": cmd_degrees,
    "check": cmd_check,
    "tour": cmd_tour,
    "sweep": cmd_sweep,
    "audit": cmd_audit,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        conv = Convention.parse(args.convention) if args.convention else Convention.default()
        return _COMMANDS[args.command](args, conv, out)
    except ZDGError as exc:
        print(f"zdg: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"zdg: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
