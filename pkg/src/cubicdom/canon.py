"""Canonical labelling by colour refinement and individualisation.

The search tree follows the usual individualisation-refinement scheme: refine
the colouring to an equitable one, individualise each vertex of the first
non-trivial cell in turn, and recurse. Leaves are discrete colourings, i.e.
relabellings of the graph; the canonical form is the relabelled adjacency that
compares greatest. Two leaves with equal adjacency give an automorphism, which
is used both to prune sibling branches and to jump back up the tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits
from .graph6 import write_graph6


@dataclass(frozen=True)
class Labelling:
    perm: tuple[int, ...]  # perm[v] is the canonical label of vertex v
    certificate: tuple[int, ...]  # adjacency rows of the canonically relabelled graph
    generators: tuple[tuple[int, ...], ...]  # automorphisms found during the search

    def canonical_graph(self) -> Graph:
        return Graph(len(self.perm), self.certificate)


def refine(nbrs: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    """Iterate 1-WL refinement to a stable colouring.

    Colours are renumbered 0..k-1 by sorting signatures, so the result only
    depends on the input colouring up to isomorphism.
    """
    n = len(colors)
    k = len(set(colors))
    colors = list(colors)
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == k:
            return new
        colors, k = new, len(rank)


def vertex_invariants(adj: Sequence[int]) -> list[tuple[int, ...]]:
    """Distance-layer counts around each vertex; cheap and isomorphism invariant.

    For each vertex: degree, triangles through it, and for the first three BFS
    layers the layer size and the number of edges entering it from the layer
    before.
    """
    nbrs = [list(bits(r)) for r in adj]
    out = []
    for v, row in enumerate(adj):
        seen = 1 << v | row
        layer = nbrs[v]
        inv = [len(layer), sum((adj[u] & row).bit_count() for u in layer) // 2]
        for _ in range(2):
            nxt = 0
            for u in layer:
                nxt |= adj[u]
            nxt &= ~seen
            inv.append(nxt.bit_count())
            inv.append(sum((adj[u] & nxt).bit_count() for u in layer))
            seen |= nxt
            layer = list(bits(nxt))
        out.append(tuple(inv))
    return out


def _individualize(colors: list[int], w: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[w] = 2 * colors[w]
    return out


def _relabel_rows(adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    rows = [0] * len(adj)
    for v, row in enumerate(adj):
        m = 0
        for u in bits(row):
            m |= 1 << perm[u]
        rows[perm[v]] = m
    return tuple(rows)


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) for every vertex."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.order
        self.nbrs = [list(bits(r)) for r in g.adj]
        self.first = None  # (path, perm, cert)
        self.best = None
        self.generators: list[tuple[int, ...]] = []

    def _automorphism(self, perm, other_perm):
        inv = [0] * self.n
        for v, lab in enumerate(other_perm):
            inv[lab] = v
        return tuple(inv[perm[v]] for v in range(self.n))

    def _leaf(self, colors, path) -> int:
        perm = tuple(colors)
        cert = _relabel_rows(self.adj, perm)
        if self.first is None:
            self.first = self.best = (path, perm, cert)
            return len(path)
        for ref_path, ref_perm, ref_cert in (self.first, self.best):
            if cert == ref_cert:
                self.generators.append(self._automorphism(perm, ref_perm))
                common = 0
                while common < len(path) and path[common] == ref_path[common]:
                    common += 1
                return common
        if cert > self.best[2]:
            self.best = (path, perm, cert)
        return len(path)

    def _pruned(self, w, explored, path) -> bool:
        fixing = [gen for gen in self.generators if all(gen[p] == p for p in path)]
        if not fixing:
            return False
        rep = orbits(self.n, fixing)
        return any(rep[w] == rep[e] for e in explored)

    def run(self, colors, path) -> int:
        target = None
        seen: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            seen.setdefault(c, []).append(v)
        for c in sorted(seen):
            if len(seen[c]) > 1:
                target = seen[c]
                break
        if target is None:
            return self._leaf(colors, path)
        depth = len(path)
        explored: list[int] = []
        for w in target:
            if explored and self._pruned(w, explored, path):
                continue
            explored.append(w)
            child = refine(self.nbrs, _individualize(colors, w))
            back = self.run(child, path + (w,))
            if back < depth:
                return back
        return depth


def canonical_labelling(g: Graph) -> Labelling:
    if g.order == 0:
        return Labelling((), (), ())
    search = _Search(g)
    invs = vertex_invariants(g.adj)
    rank = {x: i for i, x in enumerate(sorted(set(invs)))}
    search.run(refine(search.nbrs, [rank[x] for x in invs]), ())
    _, perm, cert = search.best
    return Labelling(perm, cert, tuple(search.generators))


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant key: the graph6 string of the canonical relabelling."""
    return write_graph6(Graph(g.order, canonical_labelling(g).certificate))


def canonical_graph(g: Graph) -> Graph:
    return canonical_labelling(g).canonical_graph()
