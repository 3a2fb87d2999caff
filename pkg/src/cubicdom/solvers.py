"""Exact domination and independent domination numbers.

Both solvers work per connected component and add the results. Inside a
component they run a depth-first branch and bound over bitmask states with the
coverage bound ceil(undominated / (max_degree + 1)).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator

from .graph import Graph, bits, closed_neighborhood, popcount

MIS_ORACLE_MAX_ORDER = 24


class Mode(str, Enum):
    DOMINATING = "dominating"
    INDEPENDENT = "independent"
    INDEPENDENT_DOMINATING = "independent_dominating"
    NEAR_INDEPENDENT_DOMINATING = "near_independent_dominating"


class OrderTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int  # vertex mask
    nodes_explored: int
    elapsed: float

    def witness_list(self) -> list[int]:
        return list(bits(self.witness))


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.vertex_mask


def is_independent(g: Graph, s: int) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))


def verify_set(g: Graph, s: int, mode: Mode | str) -> bool:
    mode = Mode(mode)
    if s & ~g.vertex_mask:
        raise ValueError("set contains vertices outside the graph")
    if mode is Mode.INDEPENDENT:
        return is_independent(g, s)
    if not is_dominating(g, s):
        return False
    if mode is Mode.DOMINATING:
        return True
    if mode is Mode.INDEPENDENT_DOMINATING:
        return is_independent(g, s)
    return all(popcount(g.adj[v] & s) <= 1 for v in bits(s))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def greedy_independent_dominating(g: Graph, within: int | None = None) -> int:
    """Greedy maximal independent set of G[within], ascending vertex order."""
    within = g.vertex_mask if within is None else within
    chosen = 0
    blocked = 0
    for v in bits(within):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= (g.adj[v] | 1 << v)
    return chosen


class _IndependentSearch:
    def __init__(self, g: Graph, comp: int):
        self.adj = g.adj
        self.closed = [g.adj[v] | 1 << v for v in range(g.order)]
        self.span = max((popcount(g.adj[v]) for v in bits(comp)), default=0) + 1
        self.best = greedy_independent_dominating(g, comp)
        self.best_size = popcount(self.best)
        self.nodes = 0

    def run(self, chosen: int, size: int, undominated: int):
        self.nodes += 1
        if not undominated:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        if size + _ceil_div(popcount(undominated), self.span) >= self.best_size:
            return
        u = (undominated & -undominated).bit_length() - 1
        # Candidates are the undominated members of N[u]; a dominated vertex is
        # in or adjacent to the chosen set and cannot join an independent set.
        for w in bits(self.closed[u] & undominated):
            self.run(chosen | 1 << w, size + 1, undominated & ~self.closed[w])


class _DominatingSearch:
    def __init__(self, g: Graph, comp: int):
        self.closed = [g.adj[v] | 1 << v for v in range(g.order)]
        self.span = max((popcount(g.adj[v]) for v in bits(comp)), default=0) + 1
        self.best = greedy_dominating(g, comp)
        self.best_size = popcount(self.best)
        self.nodes = 0

    def run(self, chosen: int, size: int, undominated: int, excluded: int):
        self.nodes += 1
        if not undominated:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        if size + _ceil_div(popcount(undominated), self.span) >= self.best_size:
            return
        # Branch on the undominated vertex with fewest remaining options.
        opts_best, count_best = 0, 99
        for u in bits(undominated):
            opts = self.closed[u] & ~excluded
            c = popcount(opts)
            if c < count_best:
                opts_best, count_best = opts, c
                if c <= 1:
                    break
        if count_best == 0:
            return
        for w in bits(opts_best):
            self.run(chosen | 1 << w, size + 1, undominated & ~self.closed[w], excluded)
            excluded |= 1 << w


def greedy_dominating(g: Graph, within: int | None = None) -> int:
    """Greedy dominating set of G[within]: repeatedly take the vertex covering most."""
    within = g.vertex_mask if within is None else within
    undominated = within
    chosen = 0
    while undominated:
        best_v, best_gain = -1, -1
        for v in bits(within):
            gain = popcount((g.adj[v] | 1 << v) & undominated)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        undominated &= ~(g.adj[best_v] | 1 << best_v)
    return chosen


def independent_domination_number(g: Graph) -> SolveResult:
    start = time.perf_counter()
    witness = 0
    nodes = 0
    for comp in g.components():
        search = _IndependentSearch(g, comp)
        search.run(0, 0, comp)
        witness |= search.best
        nodes += search.nodes
    return SolveResult(popcount(witness), witness, nodes, time.perf_counter() - start)


def domination_number(g: Graph) -> SolveResult:
    start = time.perf_counter()
    witness = 0
    nodes = 0
    for comp in g.components():
        search = _DominatingSearch(g, comp)
        search.run(0, 0, comp, 0)
        witness |= search.best
        nodes += search.nodes
    return SolveResult(popcount(witness), witness, nodes, time.perf_counter() - start)


def oracle_enumerate_mis(g: Graph) -> Iterator[int]:
    """Every maximal independent set exactly once.

    Bron-Kerbosch with pivoting, run on the complement graph (maximal cliques
    of the complement are the maximal independent sets).
    """
    n = g.order
    if n > MIS_ORACLE_MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds oracle guard {MIS_ORACLE_MAX_ORDER}")
    full = g.vertex_mask
    non_adj = [full & ~(g.adj[v] | 1 << v) for v in range(n)]

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: popcount(p & non_adj[u]))
        for v in bits(p & ~non_adj[pivot]):
            yield from expand(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, full, 0)


def oracle_independent_domination_number(g: Graph) -> int:
    return min(popcount(s) for s in oracle_enumerate_mis(g))


def oracle_domination_number(g: Graph) -> int:
    """Smallest k such that some k-subset dominates, by direct sweep."""
    full = g.vertex_mask
    closed = [g.adj[v] | 1 << v for v in range(g.order)]
    for k in range(g.order + 1):
        for combo in combinations(range(g.order), k):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                return k
    return g.order


def minimum_dominating_sets(g: Graph) -> Iterator[int]:
    """Every minimum dominating set exactly once, in search order.

    Same branching as the gamma solver, but children are disjoint (later
    siblings exclude earlier ones) and the bound only cuts branches that
    cannot finish at size gamma.
    """
    gamma = domination_number(g).value
    closed = [g.adj[v] | 1 << v for v in range(g.order)]
    span = g.max_degree() + 1

    def walk(chosen: int, size: int, undominated: int, excluded: int):
        if not undominated:
            yield chosen
            return
        if size + _ceil_div(popcount(undominated), span) > gamma:
            return
        u = (undominated & -undominated).bit_length() - 1
        for w in bits(closed[u] & ~excluded):
            yield from walk(chosen | 1 << w, size + 1, undominated & ~closed[w], excluded)
            excluded |= 1 << w

    yield from walk(0, 0, g.vertex_mask, 0)


def edge_minimal_dominating_set(g: Graph) -> SolveResult:
    """A minimum dominating set with the fewest edges inside it.

    Ties go to the numerically smallest mask.
    """
    start = time.perf_counter()
    best = None
    best_key = None
    count = 0
    for d in minimum_dominating_sets(g):
        count += 1
        key = (sum(popcount(g.adj[v] & d) for v in bits(d)) // 2, d)
        if best_key is None or key < best_key:
            best, best_key = d, key
    return SolveResult(popcount(best), best, count, time.perf_counter() - start)
