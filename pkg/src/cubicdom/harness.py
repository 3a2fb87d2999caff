"""Bound-verification pipelines, extremal search and report I/O.

Three checks are supported, keyed by the short names used on the command line:

  T15  14 i(G) <= 14 n0 + 9 n1 + 6 n2 + 5 n3   (subcubic, no 4-cycle)
  T14  14 i(G) <= 5 |V(G)|                      (cubic, no 4-cycle)
  T17  4 i(G) <= 5 gamma(G)                     (cubic, no 4-cycle)

Graphs outside a check's hypothesis are reported with a flag and never count
towards the verdict. All ratio comparisons are integer cross-multiplications.
"""
from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_form
from .graph import Graph, bits, has_four_cycle, is_cubic, is_subcubic
from .graph6 import parse_graph6, write_graph6
from .solvers import domination_number, independent_domination_number, verify_set
from .structure import WEIGHTS

log = logging.getLogger(__name__)

THEOREMS = {
    "T15": "subcubic_bound",
    "T14": "cubic_bound",
    "T17": "ratio_bound",
}


class HypothesisViolation(RuntimeError):
    pass


def theorem_key(name: str) -> str:
    """Accept either the short key (T15) or the long name (subcubic_bound)."""
    if name in THEOREMS:
        return name
    for key, long_name in THEOREMS.items():
        if name == long_name:
            return key
    raise ValueError(f"unknown theorem {name!r}; expected one of {sorted(THEOREMS)}")


@dataclass
class BoundReport:
    graph_id: str
    graph6: str
    n: int
    i_value: int
    gamma_value: int
    weight_total: int | None
    theorem15_lhs: int
    theorem15_rhs: int | None
    ratio_num: int
    ratio_den: int
    tight15: bool
    ratio_ok: bool
    theorem: str
    in_scope: bool
    violation: bool
    i_witness: list[int] = field(default_factory=list)
    gamma_witness: list[int] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "BoundReport":
        return cls(**json.loads(line))


def _hypothesis_flags(g: Graph, theorem: str) -> list[str]:
    flags = []
    if theorem == "T15":
        if not is_subcubic(g):
            flags.append("max degree > 3 - outside the subcubic hypothesis")
    elif not is_cubic(g) or g.order == 0:
        flags.append("not cubic - outside the cubic hypothesis")
    if has_four_cycle(g):
        flags.append("has C4 - outside the no-4-cycle hypothesis")
    return flags


def bound_report(g: Graph, theorem: str) -> BoundReport:
    theorem = theorem_key(theorem)
    ir = independent_domination_number(g)
    gr = domination_number(g)
    flags = _hypothesis_flags(g, theorem)
    subcubic = is_subcubic(g)
    weight = sum(WEIGHTS[d] for d in g.degrees()) if subcubic else None
    lhs = 14 * ir.value
    tight = weight is not None and lhs == weight
    ratio_ok = 4 * ir.value <= 5 * gr.value
    if theorem == "T15":
        broken = weight is None or lhs > weight
    elif theorem == "T14":
        broken = lhs > 5 * g.order
    else:
        broken = not ratio_ok
    in_scope = not flags
    return BoundReport(
        graph_id=canonical_form(g),
        graph6=write_graph6(g),
        n=g.order,
        i_value=ir.value,
        gamma_value=gr.value,
        weight_total=weight,
        theorem15_lhs=lhs,
        theorem15_rhs=weight,
        ratio_num=ir.value,
        ratio_den=gr.value,
        tight15=tight,
        ratio_ok=ratio_ok,
        theorem=theorem,
        in_scope=in_scope,
        violation=in_scope and broken,
        i_witness=list(bits(ir.witness)),
        gamma_witness=list(bits(gr.witness)),
        flags=flags,
    )


def _report_task(args: tuple[str, str]) -> BoundReport:
    text, theorem = args
    return bound_report(parse_graph6(text), theorem)


def parallel_map(fn: Callable, items: Sequence, workers: int = 1, chunksize: int = 16) -> list:
    """Order-preserving map, optionally over a process pool."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


@dataclass
class Verdict:
    theorem: str
    passed: bool
    checked: int
    in_scope: int
    violations: list[BoundReport]
    tight: list[BoundReport]

    def exit_code(self) -> int:
        return 0 if self.passed else 1


def verify_theorem(
    graphs: Iterable[Graph],
    theorem: str,
    strict: bool = False,
    workers: int = 1,
    inject: Iterable[BoundReport] = (),
) -> tuple[list[BoundReport], Verdict]:
    """Solve every graph and check ``theorem`` on it.

    With ``strict`` a graph outside the hypothesis raises HypothesisViolation
    instead of being flagged. ``inject`` appends fabricated reports; it exists
    so the failure path can be exercised without a real counterexample.
    """
    theorem = theorem_key(theorem)
    texts = [write_graph6(g) for g in graphs]
    reports = parallel_map(_report_task, [(t, theorem) for t in texts], workers)
    reports.extend(inject)
    if strict:
        for r in reports:
            if not r.in_scope:
                raise HypothesisViolation(f"{r.graph6}: {'; '.join(r.flags)}")
    violations = [r for r in reports if r.violation]
    for r in violations:
        log.error("VIOLATION of %s: %s", theorem, r.to_json())
    verdict = Verdict(
        theorem=theorem,
        passed=not violations,
        checked=len(reports),
        in_scope=sum(r.in_scope for r in reports),
        violations=violations,
        tight=[r for r in reports if r.in_scope and r.tight15],
    )
    return reports, verdict


def fabricated_violation(theorem: str = "T15") -> BoundReport:
    """A report that claims a counterexample; for exercising the failure path only."""
    return BoundReport(
        graph_id="@", graph6="@", n=1, i_value=2, gamma_value=1, weight_total=14,
        theorem15_lhs=28, theorem15_rhs=14, ratio_num=2, ratio_den=1, tight15=False,
        ratio_ok=False, theorem=theorem, in_scope=True, violation=True,
        flags=["fabricated record"],
    )


def reverify(report: BoundReport) -> bool:
    """Re-parse and re-solve a report; True iff every stored value reproduces."""
    g = parse_graph6(report.graph6)
    fresh = bound_report(g, report.theorem)
    if (fresh.i_value, fresh.gamma_value, fresh.weight_total, fresh.graph_id) != (
        report.i_value, report.gamma_value, report.weight_total, report.graph_id
    ):
        return False
    iw = sum(1 << v for v in report.i_witness)
    gw = sum(1 << v for v in report.gamma_witness)
    return (
        len(report.i_witness) == report.i_value
        and len(report.gamma_witness) == report.gamma_value
        and verify_set(g, iw, "independent_dominating")
        and verify_set(g, gw, "dominating")
    )


@dataclass
class SearchSummary:
    objective: str  # "max_ratio" or "tight_5_14"
    best_num: int
    best_den: int
    witnesses: list[str]
    graphs_scanned: int

    @property
    def best_value(self) -> Fraction:
        return Fraction(self.best_num, self.best_den)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _ratio_task(text: str) -> tuple[str, int, int]:
    g = parse_graph6(text)
    return text, independent_domination_number(g).value, domination_number(g).value


def search_extremal(graphs: Iterable[Graph], objective: str, workers: int = 1) -> SearchSummary:
    """Exact maximum of i/gamma, or every graph with 14 i = 5 n.

    For ``tight_5_14`` the best value stored is the largest 14 i / (5 n) seen.
    """
    if objective not in ("max_ratio", "tight_5_14"):
        raise ValueError(f"unknown objective {objective!r}")
    texts = [write_graph6(g) for g in graphs]
    rows = parallel_map(_ratio_task, texts, workers)
    best_num, best_den = 0, 1
    witnesses: list[str] = []
    for text, i, gamma in rows:
        if objective == "max_ratio":
            num, den = i, gamma
        else:
            num, den = 14 * i, 5 * parse_graph6(text).order
        if den == 0:
            continue
        cmp = num * best_den - best_num * den
        if cmp > 0:
            best_num, best_den = num, den
            witnesses = [text]
        elif cmp == 0:
            witnesses.append(text)
    if objective == "tight_5_14":
        witnesses = [t for t, i, _ in rows if 14 * i == 5 * parse_graph6(t).order]
    f = Fraction(best_num, best_den)
    return SearchSummary(objective, f.numerator, f.denominator, witnesses, len(rows))


def summary_witnesses_reverify(summary: SearchSummary) -> bool:
    for text in summary.witnesses:
        g = parse_graph6(text)
        i = independent_domination_number(g).value
        if summary.objective == "max_ratio":
            value = Fraction(i, domination_number(g).value)
            if value != summary.best_value:
                return False
        elif 14 * i != 5 * g.order:
            return False
    return True


def write_jsonl(path: str | Path, records: Iterable) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def read_reports(path: str | Path) -> Iterator[BoundReport]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield BoundReport.from_json(line)


CSV_COLUMNS = ("n", "count", "max_i", "max_ratio_num", "max_ratio_den", "tight_count")


def summary_rows(reports: Iterable[BoundReport]) -> list[dict]:
    by_n: dict[int, dict] = {}
    for r in reports:
        row = by_n.setdefault(r.n, {"n": r.n, "count": 0, "max_i": 0, "max_ratio_num": 0, "max_ratio_den": 1, "tight_count": 0})
        row["count"] += 1
        row["max_i"] = max(row["max_i"], r.i_value)
        if r.ratio_den and r.ratio_num * row["max_ratio_den"] > row["max_ratio_num"] * r.ratio_den:
            row["max_ratio_num"], row["max_ratio_den"] = r.ratio_num, r.ratio_den
        row["tight_count"] += int(r.tight15)
    return [by_n[n] for n in sorted(by_n)]


def write_csv_summary(path: str | Path, reports: Iterable[BoundReport]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in summary_rows(reports):
            writer.writerow(row)


def dump_violations(path: str | Path, violations: Sequence[BoundReport]) -> None:
    """graph6 line followed by the full JSON report, for each violation."""
    with open(path, "w", encoding="utf-8") as fh:
        for r in violations:
            fh.write(r.graph6 + "\n")
            fh.write("# " + r.to_json() + "\n")
