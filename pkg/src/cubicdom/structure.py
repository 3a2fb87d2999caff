"""Weights, weight change, degree classes and the constructive set procedures.

Weights are defined for subcubic graphs only: 14, 9, 6, 5 for degree 0..3.
Wherever a procedure has a free choice, the lowest vertex index wins.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    DegreeProfile,
    Graph,
    bits,
    closed_neighborhood,
    degree_profile,
    induced_degree_count,
    induced_edge_count,
    is_cubic,
    mask_of,
    popcount,
)
from .solvers import is_independent, verify_set

WEIGHTS = (14, 9, 6, 5)


class StructureError(ValueError):
    pass


class MaxDegreeExceededError(StructureError):
    pass


class EmptySetError(StructureError):
    pass


class NotIndependentError(StructureError):
    pass


class NotCubicError(StructureError):
    pass


class NotMinimumDominatingError(StructureError):
    pass


class PreconditionError(StructureError):
    pass


class NoA2VertexError(StructureError):
    pass


def _require_subcubic(g: Graph):
    if g.max_degree() > 3:
        raise MaxDegreeExceededError(f"max degree {g.max_degree()} > 3; weights are defined for subcubic graphs")


@dataclass(frozen=True)
class WeightSummary:
    profile: DegreeProfile
    total: int


def weight_summary(g: Graph) -> WeightSummary:
    _require_subcubic(g)
    p = degree_profile(g)
    total = sum(w * c for w, c in zip(WEIGHTS, p.as_tuple()))
    return WeightSummary(p, total)


def vertex_weight(g: Graph, v: int) -> int:
    return WEIGHTS[g.degree(v)]


def subset_weight(g: Graph, x: int) -> int:
    _require_subcubic(g)
    return sum(WEIGHTS[popcount(g.adj[v])] for v in bits(x))


def weight_change(g: Graph, x: int) -> int:
    """Total rise in weight of the vertices of G - X caused by deleting X."""
    _require_subcubic(g)
    if not x:
        raise EmptySetError("weight change is defined for non-empty X")
    rest, keep = g.delete(x)
    return sum(WEIGHTS[rest.degree(i)] - WEIGHTS[g.degree(v)] for i, v in enumerate(keep))


def key_lemma_sides(g: Graph, s: int) -> tuple[int, int]:
    """(14|S|, w(N[S]) - c(N[S])) for a non-empty independent set S.

    No inequality is implied between the two numbers on arbitrary input.
    """
    _require_subcubic(g)
    if not s:
        raise EmptySetError("S must be non-empty")
    if not is_independent(g, s):
        raise NotIndependentError("S has an internal edge")
    u = closed_neighborhood(g, s)
    return 14 * popcount(s), subset_weight(g, u) - weight_change(g, u)


@dataclass(frozen=True)
class ABPartition:
    a0: int
    a1: int
    a2: int
    a3: int
    b0: int
    b1: int
    b2: int
    other: int

    def parts(self) -> dict[str, int]:
        return {
            "a0": self.a0, "a1": self.a1, "a2": self.a2, "a3": self.a3,
            "b0": self.b0, "b1": self.b1, "b2": self.b2, "other": self.other,
        }


def classify_ab(g: Graph) -> ABPartition:
    _require_subcubic(g)
    degs = g.degrees()
    twos = mask_of(v for v, d in enumerate(degs) if d == 2)
    a = [0, 0, 0, 0]
    b = [0, 0, 0]
    other = 0
    for v, d in enumerate(degs):
        k = popcount(g.adj[v] & twos)
        if d == 3:
            a[k] |= 1 << v
        elif d == 2:
            b[k] |= 1 << v
        else:
            other |= 1 << v
    return ABPartition(*a, *b, other)


@dataclass(frozen=True)
class ConfigHit:
    claim_part: str  # "i" .. "vi"
    vertices: int  # vertex mask of the witness
    roles: tuple[int, ...] = field(default=())  # witness vertices in the order the configuration names them

    def vertex_list(self) -> list[int]:
        return list(bits(self.vertices))


def _hit(part: str, roles) -> ConfigHit:
    return ConfigHit(part, mask_of(roles), tuple(roles))


def find_forbidden_configs(g: Graph) -> list[ConfigHit]:
    """Every occurrence of the six reducible configurations.

    (i)   roles (v, a, b): v has 1-neighbours a < b.
    (ii)  roles (v, *N(v)): d(v) >= 1 and every neighbour has degree <= 2.
    (iii) roles (v, a, b): 3-vertex v, 1-neighbour a, 2-neighbour b.
    (iv)  roles (v, u, w, p): triangle vuw, p a 1-neighbour of v.
    (v)   roles (x, y, z): a triangle x < y < z containing a 2-vertex.
    (vi)  roles (v, u, w): path vuw of 3-vertices, v has a 1-neighbour, u has none.
    """
    _require_subcubic(g)
    n = g.order
    adj = g.adj
    degs = g.degrees()
    ones = mask_of(v for v in range(n) if degs[v] == 1)
    twos = mask_of(v for v in range(n) if degs[v] == 2)
    low = ones | twos | mask_of(v for v in range(n) if degs[v] == 0)
    hits: list[ConfigHit] = []

    for v in range(n):
        for a, b in combinations(bits(adj[v] & ones), 2):
            hits.append(_hit("i", (v, a, b)))
    for v in range(n):
        if degs[v] >= 1 and not (adj[v] & ~low):
            hits.append(_hit("ii", (v, *bits(adj[v]))))
    for v in range(n):
        if degs[v] == 3:
            for a in bits(adj[v] & ones):
                for b in bits(adj[v] & twos):
                    hits.append(_hit("iii", (v, a, b)))

    triangles = []
    for x in range(n):
        for y in bits(adj[x] >> (x + 1) << (x + 1)):
            for z in bits(adj[x] & adj[y] >> (y + 1) << (y + 1)):
                triangles.append((x, y, z))
    for x, y, z in triangles:
        for v, u, w in ((x, y, z), (y, x, z), (z, x, y)):
            for p in bits(adj[v] & ones):
                hits.append(_hit("iv", (v, u, w, p)))
    for tri in triangles:
        if any(degs[t] == 2 for t in tri):
            hits.append(_hit("v", tri))

    for u in range(n):
        if degs[u] != 3 or adj[u] & ones:
            continue
        for v in bits(adj[u]):
            if degs[v] != 3 or not adj[v] & ones:
                continue
            for w in bits(adj[u] & ~(1 << v)):
                if degs[w] == 3:
                    hits.append(_hit("vi", (v, u, w)))
    return hits


def recheck_config(g: Graph, hit: ConfigHit) -> bool:
    """Independently re-verify that a hit instantiates its configuration."""
    d = g.degree
    r = hit.roles
    if hit.claim_part == "i":
        v, a, b = r
        return a != b and g.has_edge(v, a) and g.has_edge(v, b) and d(a) == 1 and d(b) == 1
    if hit.claim_part == "ii":
        v = r[0]
        return d(v) >= 1 and all(d(u) <= 2 for u in bits(g.adj[v]))
    if hit.claim_part == "iii":
        v, a, b = r
        return d(v) == 3 and g.has_edge(v, a) and g.has_edge(v, b) and d(a) == 1 and d(b) == 2
    if hit.claim_part == "iv":
        v, u, w, p = r
        return g.has_edge(v, u) and g.has_edge(u, w) and g.has_edge(w, v) and g.has_edge(v, p) and d(p) == 1
    if hit.claim_part == "v":
        x, y, z = r
        return g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z) and 2 in (d(x), d(y), d(z))
    if hit.claim_part == "vi":
        v, u, w = r
        return (
            v != w and g.has_edge(v, u) and g.has_edge(u, w)
            and d(v) == d(u) == d(w) == 3
            and any(d(p) == 1 for p in bits(g.adj[v]))
            and not any(d(p) == 1 for p in bits(g.adj[u]))
        )
    return False


@dataclass(frozen=True)
class WalkFailure:
    step: int  # index into ``walk`` of the vertex where the walk got stuck
    vertex: int
    reason: str
    walk: tuple[int, ...]


@dataclass(frozen=True)
class A2B1Cycle:
    cycle: tuple[int, ...]
    walk: tuple[int, ...]  # full walk; the cycle is a suffix of it


def find_a2b1_cycle(g: Graph) -> A2B1Cycle | WalkFailure:
    """Walk through A2 and B1 vertices until it closes into a cycle.

    From an A2-vertex with a B1-neighbour other than its predecessor, the walk
    follows that B1-vertex, its B1-partner, and the partner's other neighbour,
    which must be in A2. Otherwise it steps to an A2-neighbour. When the walk
    revisits a vertex the closed part is checked: consecutive A2-vertices on it
    must have a B0-neighbour at the first of the pair. Anything the walk needs
    but does not find is reported as a WalkFailure.
    """
    ab = classify_ab(g)
    if not ab.a2:
        raise NoA2VertexError("graph has no 3-vertex with exactly two 2-neighbours")
    adj = g.adj
    a2, b1, b0 = ab.a2, ab.b1, ab.b0
    walk = [(a2 & -a2).bit_length() - 1]
    pos = {walk[0]: 0}

    def close(nxt: int):
        cycle = tuple(walk[pos[nxt]:])
        if len(cycle) < 3:
            return WalkFailure(len(walk) - 1, walk[-1], f"walk returned to {nxt} without a cycle", tuple(walk))
        k = len(cycle)
        for i in range(k):
            x, y = cycle[i], cycle[(i + 1) % k]
            if a2 >> x & 1 and a2 >> y & 1 and not adj[x] & b0:
                return WalkFailure(pos[x], x, f"A2-A2 step {x}->{y} but {x} has no B0-neighbour", tuple(walk))
        return A2B1Cycle(cycle, tuple(walk))

    while True:
        cur = walk[-1]
        prev = walk[-2] if len(walk) > 1 else -1
        fresh = adj[cur] & b1 & ~(1 << prev if prev >= 0 else 0)
        if fresh:
            u1 = (fresh & -fresh).bit_length() - 1
            partner = adj[u1] & b1
            if not partner:
                return WalkFailure(len(walk) - 1, cur, f"B1-vertex {u1} has no B1-neighbour", tuple(walk))
            u2 = (partner & -partner).bit_length() - 1
            onward = adj[u2] & ~(1 << u1)
            u3 = (onward & -onward).bit_length() - 1
            if not a2 >> u3 & 1:
                return WalkFailure(len(walk) - 1, cur, f"path {u1}-{u2}-{u3} ends outside A2", tuple(walk))
            for nxt in (u1, u2, u3):
                if nxt in pos:
                    return close(nxt)
                pos[nxt] = len(walk)
                walk.append(nxt)
        else:
            options = adj[cur] & a2 & ~(1 << prev if prev >= 0 else 0)
            if not options:
                return WalkFailure(len(walk) - 1, cur, f"A2-vertex {cur} has no fresh B1- or A2-neighbour", tuple(walk))
            nxt = (options & -options).bit_length() - 1
            if nxt in pos:
                return close(nxt)
            pos[nxt] = len(walk)
            walk.append(nxt)


def epn(g: Graph, v: int, x: int) -> int:
    """X-external private neighbours of v: u outside X with N[u] & X == {v}."""
    if not x >> v & 1:
        raise PreconditionError(f"vertex {v} is not in X")
    out = 0
    for u in bits(g.adj[v] & ~x):
        if (g.adj[u] | 1 << u) & x == 1 << v:
            out |= 1 << u
    return out


def _require_cubic(g: Graph):
    if not is_cubic(g) or g.order == 0:
        raise NotCubicError("graph is not cubic")


def reduce_to_near_independent(g: Graph, d: int, trace: list | None = None) -> int:
    """Swap a vertex with two or more D-neighbours for its private neighbour.

    Repeats until G[D] has maximum degree at most 1. Needs D to be a minimum
    dominating set of a cubic graph; each swap removes at least two edges of
    G[D]. ``trace``, if given, receives (D, edge count) after every step.
    """
    _require_cubic(g)
    if not verify_set(g, d, "dominating"):
        raise NotMinimumDominatingError("input is not dominating")
    if trace is not None:
        trace.append((d, induced_edge_count(g, d)))
    while True:
        heavy = [v for v in bits(d) if popcount(g.adj[v] & d) >= 2]
        if not heavy:
            return d
        v = heavy[0]
        private = epn(g, v, d)
        if popcount(private) != 1:
            raise NotMinimumDominatingError(
                f"vertex {v} has {popcount(private)} external private neighbours; D is not minimum"
            )
        d = (d | private) & ~(1 << v)
        if trace is not None:
            trace.append((d, induced_edge_count(g, d)))


def near_independent_to_independent(g: Graph, x: int, trace: list | None = None) -> int:
    """Turn a near independent dominating set into an independent dominating one.

    While G[X] has an edge: take the lowest v in X with an X-neighbour, let I be
    a greedy maximal independent subset of epn(v, X), and replace X by
    (X | I) - v. The result has at most |X| + n1(G[X]) / 2 vertices.
    """
    _require_cubic(g)
    if not verify_set(g, x, "near_independent_dominating"):
        raise PreconditionError("X is not a near independent dominating set")
    if trace is not None:
        trace.append((x, induced_degree_count(g, x, 1)))
    while True:
        touching = [v for v in bits(x) if g.adj[v] & x]
        if not touching:
            return x
        v = touching[0]
        private = epn(g, v, x)
        chosen = 0
        for u in bits(private):
            if not g.adj[u] & chosen:
                chosen |= 1 << u
        x = (x | chosen) & ~(1 << v)
        if trace is not None:
            trace.append((x, induced_degree_count(g, x, 1)))


def constructive_independent_dominating(g: Graph, d: int) -> tuple[int, int]:
    """Chain the two procedures from a minimum dominating set D.

    Returns (near independent D', independent dominating set).
    """
    near = reduce_to_near_independent(g, d)
    return near, near_independent_to_independent(g, near)
