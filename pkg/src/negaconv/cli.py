"""negaconv command line: build, verify and table."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .families import FAMILIES, build_instance, reproduce_table
from .negacyclic import DEFAULT_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    family: str | None = None
    q: int | None = None
    i: int | None = None
    table: int | None = None
    budget: int = DEFAULT_BUDGET
    fmt: str = "text"
    out: str | None = None
    verbose: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_budget() -> int:
    raw = os.environ.get("NEGACONV_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"NEGACONV_BUDGET={raw!r} is not an integer") from None
    if value < 1:
        raise UsageError("NEGACONV_BUDGET must be positive")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="negaconv", description="MDS convolutional codes from negacyclic BCH codes")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--budget", type=int, default=None, help="search budget (default $NEGACONV_BUDGET or 10^6)")
        p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write the result to this path")
        p.add_argument("--seedless", action="store_true", help=argparse.SUPPRESS)
        p.add_argument("-v", "--verbose", action="store_true")

    for name, helptext in (("build", "construct an instance (ranks only)"),
                           ("verify", "construct and run every check")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--i", type=int, required=True)
        common(p)
    p = sub.add_parser("table", help="regenerate a published table and diff it")
    p.add_argument("--table", type=int, required=True)
    common(p)
    return parser


def parse_config(argv) -> CliConfig:
    args = make_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required: build, verify or table")
    if args.seedless:
        raise UsageError("--seedless is reserved; nothing here uses randomness")
    budget = args.budget if args.budget is not None else _default_budget()
    if budget < 1:
        raise UsageError("--budget must be positive")
    if args.command == "table":
        if args.table not in (1, 2):
            raise UsageError(f"unknown table {args.table}; expected 1 or 2")
        return CliConfig("table", table=args.table, budget=budget, fmt=args.fmt, out=args.out,
                         verbose=args.verbose)
    return CliConfig(args.command, args.family, args.q, args.i, None, budget, args.fmt, args.out, args.verbose)


def _instance_csv(inst) -> str:
    n, k, g, m, d = inst.dual_params
    head = "family,q,i,n,k,gamma,mu,d_f,status"
    return f"{head}\n{inst.family},{inst.q},{inst.i},{n},{k},{g},{m},{'' if d is None else d},{inst.status}\n"


def _instance_text(inst, with_checks: bool) -> str:
    lines = [inst.classical_text()]
    if inst.quantum is not None:
        lines.append(inst.quantum.tuple_text() + (" quantum MDS" if inst.quantum.mds else ""))
    if with_checks:
        for c in inst.certificate.checks:
            flag = "" if c.mandatory else " (optional)"
            lines.append(f"  {c.status:8s} {c.name}{flag}: {c.method}" + (f"; {c.detail}" if c.detail else ""))
        lines.append(f"status: {inst.status}; certificate {'PASS' if inst.certificate.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: CliConfig) -> int:
    if cfg.command == "table":
        report = reproduce_table(cfg.table, cfg.budget)
        if cfg.fmt == "csv":
            body = report.csv()
        elif cfg.fmt == "json":
            body = json.dumps(report.to_record(), sort_keys=True, indent=2) + "\n"
        else:
            body = report.diff_text() + "\n"
        _emit(body, cfg.out)
        if cfg.fmt != "text" and cfg.out:
            sys.stdout.write(report.diff_text() + "\n")
        return EXIT_OK if report.ok else EXIT_FAIL

    try:
        inst = build_instance(cfg.family, cfg.q, cfg.i, cfg.budget, verify=cfg.command == "verify")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verify = cfg.command == "verify"
    if cfg.fmt == "json":
        body = inst.to_json() + "\n"
    elif cfg.fmt == "csv":
        body = _instance_csv(inst)
    else:
        body = _instance_text(inst, verify or cfg.verbose)
    _emit(body, cfg.out)
    if cfg.out and verify:
        sys.stdout.write(_instance_text(inst, False))
    return EXIT_OK if inst.certificate.passed else EXIT_FAIL


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except UsageError as exc:
        sys.stderr.write(f"negaconv: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
