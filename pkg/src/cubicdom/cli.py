"""Command line front end.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error, 3 runtime error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator, Sequence

from . import harness
from .enumeration import EnumerationError, EnumSpec, enumerate_graphs, ingest_graph6
from .families import KINDS, FamilyError, FamilySpec, build
from .graph import Graph, GraphError, bits, mask_of
from .graph6 import Graph6Error, write_graph6
from .solvers import domination_number, independent_domination_number
from .structure import (
    StructureError,
    classify_ab,
    find_forbidden_configs,
    key_lemma_sides,
    weight_summary,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3

log = logging.getLogger("cubicdom")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _orders(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def parse_enum(text: str) -> list[EnumSpec]:
    """Parse "n=8,subcubic,no-c4[,connected][,girth=5]"; n may be a range "10..14".

    For cubic ranges the odd orders are skipped.
    """
    orders = None
    opts = {"regularity": "subcubic", "forbid_c4": False, "min_girth": None, "connected": False}
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        key, _, value = token.partition("=")
        try:
            if key == "n":
                orders = _orders(value)
            elif key in ("girth", "min-girth"):
                opts["min_girth"] = int(value)
            elif token in ("cubic", "subcubic"):
                opts["regularity"] = token
            elif token == "no-c4":
                opts["forbid_c4"] = True
            elif token == "connected":
                opts["connected"] = True
            else:
                raise UsageError(f"unknown enumeration token {token!r}")
        except ValueError as exc:
            raise UsageError(f"bad enumeration token {token!r}: {exc}") from exc
    if orders is None:
        raise UsageError("enumeration spec needs n=N or n=LO..HI")
    if opts["regularity"] == "cubic" and len(orders) > 1:
        orders = [n for n in orders if n % 2 == 0 and n >= 4]
    try:
        return [EnumSpec(n, **opts) for n in orders]
    except EnumerationError as exc:
        raise UsageError(str(exc)) from exc


def _family_spec(kind: str, args) -> FamilySpec:
    if kind == "tkl":
        params = (args.k, args.l)
    elif kind == "complete_bipartite":
        params = (args.a, args.b)
    elif kind in ("cycle", "path", "edgeless", "complete"):
        params = (args.n,)
    else:
        params = ()
    if any(p is None for p in params):
        raise UsageError(f"family {kind} needs parameters; see --help")
    return FamilySpec(kind, params)


def _add_family_params(p: argparse.ArgumentParser):
    p.add_argument("--k", type=int, help="tkl: number of pendant cycle vertices")
    p.add_argument("--l", type=int, help="tkl: number of chord vertices")
    p.add_argument("--n", dest="n", type=int, help="cycle/path/edgeless/complete order")
    p.add_argument("--a", type=int, help="complete_bipartite: first side")
    p.add_argument("--b", type=int, help="complete_bipartite: second side")


def _source(args) -> Iterator[Graph]:
    """Graphs from --in, --enum or --family, whichever was given."""
    chosen = [x for x in ("infile", "enum", "family") if getattr(args, x, None)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --in, --enum, --family")
    if args.infile:
        return ingest_graph6(args.infile, strict=getattr(args, "strict_input", False))
    if args.enum:
        specs = parse_enum(args.enum)
        return (g for spec in specs for g in enumerate_graphs(spec, override_guard=args.override_guard))
    return iter([build(_family_spec(args.family, args))])


def _write_lines(lines, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
    else:
        for line in lines:
            print(line)


def cmd_family(args) -> int:
    g = build(_family_spec(args.kind, args))
    _write_lines([write_graph6(g)], args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    text = f"n={args.n},{args.cls}"
    if args.no_c4:
        text += ",no-c4"
    if args.connected:
        text += ",connected"
    if args.min_girth:
        text += f",girth={args.min_girth}"
    specs = parse_enum(text)
    lines = (write_graph6(g) for spec in specs for g in enumerate_graphs(spec, override_guard=args.override_guard))
    _write_lines(lines, args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    def rows():
        for g in _source(args):
            row = {"graph6": write_graph6(g), "n": g.order}
            if args.param in ("i", "both"):
                r = independent_domination_number(g)
                row.update(i=r.value, i_witness=r.witness_list(), i_nodes=r.nodes_explored)
            if args.param in ("gamma", "both"):
                r = domination_number(g)
                row.update(gamma=r.value, gamma_witness=r.witness_list(), gamma_nodes=r.nodes_explored)
            yield json.dumps(row, sort_keys=True)

    _write_lines(rows(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    inject = [harness.fabricated_violation(args.theorem)] if args.inject_violation else []
    reports, verdict = harness.verify_theorem(
        _source(args), args.theorem, strict=args.strict, workers=args.workers, inject=inject
    )
    if args.report:
        harness.write_jsonl(args.report, reports)
    if args.csv:
        harness.write_csv_summary(args.csv, reports)
    if verdict.violations and args.violations:
        harness.dump_violations(args.violations, verdict.violations)
    status = "PASS" if verdict.passed else "FAIL"
    print(
        f"{status} {verdict.theorem}: checked={verdict.checked} in_scope={verdict.in_scope} "
        f"violations={len(verdict.violations)} tight={len(verdict.tight)}"
    )
    for r in verdict.violations:
        print(f"VIOLATION {r.graph6} i={r.i_value} gamma={r.gamma_value} witness={r.i_witness}")
    return verdict.exit_code()


def cmd_search(args) -> int:
    objective = {"ratio": "max_ratio", "tight": "tight_5_14"}[args.objective]
    summary = harness.search_extremal(_source(args), objective, workers=args.workers)
    if args.report:
        harness.write_jsonl(args.report, [summary])
    print(summary.to_json())
    return EXIT_OK


def _analyze_row(g: Graph, what: str, s: int | None) -> dict:
    row: dict = {"graph6": write_graph6(g), "n": g.order}
    if what == "weights":
        ws = weight_summary(g)
        row.update(profile=list(ws.profile.as_tuple()), weight_total=ws.total)
    elif what == "ab":
        row.update({k: list(bits(m)) for k, m in classify_ab(g).parts().items()})
    elif what == "configs":
        row["configs"] = [{"part": h.claim_part, "roles": list(h.roles)} for h in find_forbidden_configs(g)]
    else:
        sets = [s] if s is not None else [1 << v for v in range(g.order)]
        row["key_lemma"] = [
            dict(zip(("set", "lhs", "rhs"), (list(bits(x)), *key_lemma_sides(g, x)))) for x in sets
        ]
    return row


def cmd_analyze(args) -> int:
    s = mask_of(int(v) for v in args.set.split(",")) if args.set else None
    rows = (json.dumps(_analyze_row(g, args.what, s), sort_keys=True) for g in _source(args))
    _write_lines(rows, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubicdom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("family", help="emit a named graph as graph6")
    p.add_argument("kind", choices=KINDS)
    _add_family_params(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="isomorph-free enumeration to graph6")
    p.add_argument("--n", required=True, help="order, or a range LO..HI")
    p.add_argument("--class", dest="cls", choices=("cubic", "subcubic"), required=True)
    p.add_argument("--no-c4", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-girth", type=int)
    p.add_argument("--override-guard", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    def add_source(p):
        p.add_argument("--in", dest="infile")
        p.add_argument("--enum", help='e.g. "n=8,subcubic,no-c4" or "n=10..14,cubic,no-c4,connected"')
        p.add_argument("--family", choices=KINDS)
        _add_family_params(p)
        p.add_argument("--override-guard", action="store_true")
        p.add_argument("--strict-input", action="store_true", help="fail on malformed graph6 lines")

    p = sub.add_parser("solve", help="exact i and/or gamma as JSONL")
    p.add_argument("--param", choices=("i", "gamma", "both"), default="both")
    add_source(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a bound over a corpus")
    p.add_argument("--theorem", choices=sorted(harness.THEOREMS), required=True)
    add_source(p)
    p.add_argument("--strict", action="store_true", help="out-of-hypothesis graphs are fatal")
    p.add_argument("--report", help="JSONL report file")
    p.add_argument("--csv", help="CSV summary file")
    p.add_argument("--violations", help="graph6 dump of violating graphs")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--inject-violation", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="extremal search over a corpus")
    p.add_argument("--objective", choices=("ratio", "tight"), required=True)
    add_source(p)
    p.add_argument("--report")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("analyze", help="structural data as JSONL")
    p.add_argument("--what", choices=("weights", "ab", "configs", "keylemma"), required=True)
    p.add_argument("--set", help="comma separated vertices of S for keylemma (default: every singleton)")
    add_source(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FamilyError, EnumerationError, StructureError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, Graph6Error, GraphError, harness.HypothesisViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
