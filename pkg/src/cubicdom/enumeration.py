"""Isomorph-free generation of subcubic and cubic graphs.

Subcubic graphs are grown edge by edge from the edgeless graph by canonical
augmentation: a child G + e is kept only when deleting the child's canonical
edge gives back a graph isomorphic to the parent. Every subgraph of a subcubic
C4-free (or girth >= g) graph is again one, so the whole augmentation tree lies
inside the class and every node is emitted.

Cubic graphs are produced by filling vertices in index order with
interchangeable-vertex pruning, and finished graphs are deduplicated by
canonical key. Only finished cubic graphs are stored, a few thousand at most
for n <= 16.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_labelling
from .graph import Graph, bits, girth, has_four_cycle
from .graph6 import Graph6Error, parse_graph6

log = logging.getLogger(__name__)

GUARD = {"cubic": 16, "subcubic": 12}


class EnumerationError(ValueError):
    pass


class GuardExceededError(EnumerationError):
    pass


class InvalidSpecError(EnumerationError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    order: int
    regularity: str = "subcubic"  # "cubic" or "subcubic"
    forbid_c4: bool = False
    min_girth: int | None = None
    connected: bool = False

    def __post_init__(self):
        if self.order < 0:
            raise InvalidSpecError("order must be non-negative")
        if self.regularity not in ("cubic", "subcubic"):
            raise InvalidSpecError(f"unknown regularity {self.regularity!r}")
        if self.regularity == "cubic" and (self.order % 2 or self.order < 4):
            raise InvalidSpecError(f"cubic graphs need even order >= 4, got {self.order}")
        if self.min_girth is not None and self.min_girth < 3:
            raise InvalidSpecError("min_girth must be >= 3")

    def admits(self, g: Graph) -> bool:
        """Re-check every predicate of this EnumSpec directly on ``g``."""
        if g.order != self.order:
            return False
        degs = g.degrees()
        if self.regularity == "cubic":
            if any(d != 3 for d in degs):
                return False
        elif any(d > 3 for d in degs):
            return False
        if self.forbid_c4 and has_four_cycle(g):
            return False
        if self.min_girth is not None and girth(g) < self.min_girth:
            return False
        if self.connected and not g.is_connected():
            return False
        return True


def _creates_c4(adj: list[int] | tuple[int, ...], a: int, b: int) -> bool:
    nb = adj[b]
    for x in bits(adj[a]):
        if adj[x] & nb:
            return True
    return False


def _distance_at_least(adj, a: int, b: int, limit: int) -> bool:
    """True iff dist(a, b) >= limit (limit >= 1)."""
    seen = reach = 1 << a
    for _ in range(limit - 1):
        if reach >> b & 1:
            return False
        nxt = 0
        for v in bits(reach):
            nxt |= adj[v]
        reach = nxt & ~seen
        seen |= reach
        if not reach:
            return True
    return not (reach >> b & 1)


def _edge_allowed(adj, a: int, b: int, forbid_c4: bool, min_girth: int | None) -> bool:
    if forbid_c4 and _creates_c4(adj, a, b):
        return False
    if min_girth is not None and min_girth > 3 and not _distance_at_least(adj, a, b, min_girth - 1):
        return False
    return True


def _pair_orbits(n: int, generators, candidates: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One representative (the first in ``candidates`` order) per orbit."""
    if not generators:
        return candidates
    index = {p: i for i, p in enumerate(candidates)}
    parent = list(range(len(candidates)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for gen in generators:
        for i, (a, b) in enumerate(candidates):
            x, y = gen[a], gen[b]
            j = index.get((x, y) if x < y else (y, x))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    return [p for i, p in enumerate(candidates) if find(i) == i]


def _canonical_edge(g: Graph, perm) -> tuple[int, int]:
    best = None
    best_key = None
    for u, v in g.edges():
        pu, pv = perm[u], perm[v]
        key = (pu, pv) if pu > pv else (pv, pu)
        if best_key is None or key > best_key:
            best_key, best = key, (u, v)
    return best


def _subcubic_tree(n: int, forbid_c4: bool, min_girth: int | None) -> Iterator[Graph]:
    root = Graph.empty(n)
    stack = [(root, canonical_labelling(root))]
    while stack:
        parent, lab = stack.pop()
        yield parent
        adj = parent.adj
        degs = parent.degrees()
        candidates = [
            (a, b)
            for a in range(n) if degs[a] < 3
            for b in range(a + 1, n)
            if degs[b] < 3 and not adj[a] >> b & 1 and _edge_allowed(adj, a, b, forbid_c4, min_girth)
        ]
        children = []
        seen = set()
        for a, b in _pair_orbits(n, lab.generators, candidates):
            child = parent.add_edge(a, b)
            clab = canonical_labelling(child)
            if clab.certificate in seen:
                continue
            seen.add(clab.certificate)
            u, v = _canonical_edge(child, clab.perm)
            if (u, v) != (a, b):
                # child - (u, v) can only match the parent if the degree multisets agree.
                if sorted((child.degree(u), child.degree(v))) != sorted((child.degree(a), child.degree(b))):
                    continue
                if canonical_labelling(child.remove_edge(u, v)).certificate != lab.certificate:
                    continue
            children.append((child, clab))
        # Reverse so that children are emitted in generation order.
        stack.extend(reversed(children))


def _cubic_search(n: int, forbid_c4: bool, min_girth: int | None, connected: bool) -> Iterator[Graph]:
    adj = [0] * n
    deg = [0] * n
    seen: set[tuple[int, ...]] = set()

    def fill() -> Iterator[Graph]:
        v = next((x for x in range(n) if deg[x] < 3), None)
        if v is None:
            g = Graph(n, tuple(adj))
            cert = canonical_labelling(g).certificate
            if cert not in seen:
                seen.add(cert)
                yield g
            return
        if deg[v] == 0 and v > 0 and connected:
            return
        cands = [w for w in range(v + 1, n) if deg[w] < 3 and not adj[v] >> w & 1]
        # Candidates with equal neighbourhoods are interchangeable; within each
        # such class only a lowest-first prefix may be picked.
        lower_twins = {
            w: sum(1 << x for x in cands if x < w and adj[x] == adj[w]) for w in cands
        }
        yield from pick(v, 3 - deg[v], cands, lower_twins, 0, 0)

    def pick(v, need, cands, lower_twins, start, picked) -> Iterator[Graph]:
        if need == 0:
            yield from fill()
            return
        for idx in range(start, len(cands) - need + 1):
            w = cands[idx]
            if lower_twins[w] & ~picked:
                continue
            if not _edge_allowed(adj, v, w, forbid_c4, min_girth):
                continue
            adj[v] |= 1 << w
            adj[w] |= 1 << v
            deg[v] += 1
            deg[w] += 1
            yield from pick(v, need - 1, cands, lower_twins, idx + 1, picked | 1 << w)
            adj[v] &= ~(1 << w)
            adj[w] &= ~(1 << v)
            deg[v] -= 1
            deg[w] -= 1

    yield from fill()


def enumerate_graphs(spec: EnumSpec, override_guard: bool = False) -> Iterator[Graph]:
    limit = GUARD[spec.regularity]
    if spec.order > limit and not override_guard:
        raise GuardExceededError(f"{spec.regularity} enumeration capped at n={limit}; pass override_guard")
    if spec.regularity == "cubic":
        source = _cubic_search(spec.order, spec.forbid_c4, spec.min_girth, spec.connected)
    else:
        source = _subcubic_tree(spec.order, spec.forbid_c4, spec.min_girth)
    for g in source:
        if spec.connected and not g.is_connected():
            continue
        yield g


def enumerate_range(orders: Iterable[int], **kwargs) -> Iterator[Graph]:
    override = kwargs.pop("override_guard", False)
    for n in orders:
        yield from enumerate_graphs(EnumSpec(n, **kwargs), override_guard=override)


def ingest_graph6(path: str | Path, spec: EnumSpec | None = None, strict: bool = False) -> Iterator[Graph]:
    """Stream the graphs of a graph6 file that satisfy ``spec``.

    Malformed lines are logged with their line number and skipped, or raised
    when ``strict`` is set.
    """
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except Graph6Error as exc:
                if strict:
                    raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
                log.warning("%s:%d: skipping malformed graph6 line: %s", path, lineno, exc)
                continue
            if spec is None or _admits_ignoring_order(spec, g):
                yield g


def _admits_ignoring_order(spec: EnumSpec, g: Graph) -> bool:
    if spec.order and g.order != spec.order:
        return False
    probe = EnumSpec.__new__(EnumSpec)
    object.__setattr__(probe, "order", g.order)
    for name in ("regularity", "forbid_c4", "min_girth", "connected"):
        object.__setattr__(probe, name, getattr(spec, name))
    return probe.admits(g)
