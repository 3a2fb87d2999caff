"""Small simple graphs stored as per-vertex neighbour bitmasks.

A vertex set is a plain ``int`` used as a bitmask; bit ``v`` set means vertex
``v`` is a member. Graphs are immutable and hashable so they can be shared
freely between worker processes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

# Returned by girth() for forests.
INFINITE_GIRTH = float("inf")


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class DegreeProfile:
    n0: int
    n1: int
    n2: int
    n3: int
    max_degree: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3)


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.adj) != n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= order")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            m = 0
            for u in bits(row):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph(self.order, tuple(rows))

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask``, relabelled 0..k-1 in ascending order.

        Returns the subgraph and the list mapping new index -> old vertex.
        """
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            m = 0
            for u in bits(self.adj[v] & mask):
                m |= 1 << index[u]
            rows.append(m)
        return Graph(len(keep), tuple(rows)), keep

    def delete(self, mask: int) -> tuple["Graph", list[int]]:
        """The graph G - X, relabelled; see :meth:`induced`."""
        return self.induced(self.vertex_mask & ~mask)

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by lowest vertex."""
        seen = 0
        comps = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.order == 0 or len(self.components()) == 1

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: S together with every neighbour of a member of S."""
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def open_neighborhood(g: Graph, s: int) -> int:
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def has_four_cycle(g: Graph) -> bool:
    """True iff two distinct vertices have at least two common neighbours."""
    adj = g.adj
    for u in range(g.order):
        for v in range(u + 1, g.order):
            common = adj[u] & adj[v]
            if common & (common - 1):
                return True
    return False


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or INFINITE_GIRTH for a forest."""
    best = INFINITE_GIRTH
    adj = g.adj
    for root in range(g.order):
        # Non-tree edges seen from each root bound the girth; the minimum over
        # all roots is exact.
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if 2 * dist[v] >= best:
                break
            for u in bits(adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def degree_profile(g: Graph) -> DegreeProfile:
    counts = [0, 0, 0, 0]
    degs = g.degrees()
    for d in degs:
        if d <= 3:
            counts[d] += 1
    return DegreeProfile(*counts, max_degree=max(degs, default=0))


def is_subcubic(g: Graph) -> bool:
    return g.max_degree() <= 3


def is_cubic(g: Graph) -> bool:
    return all(d == 3 for d in g.degrees())


def induced_degree_count(g: Graph, x: int, k: int) -> int:
    """n_k(G[X]): members of X with exactly k neighbours inside X."""
    return sum(1 for v in bits(x) if popcount(g.adj[v] & x) == k)


def induced_edge_count(g: Graph, x: int) -> int:
    return sum(popcount(g.adj[v] & x) for v in bits(x)) // 2
