"""Named graph families with fixed vertex labellings.

``tkl(k, l)`` is the subcubic tight family: a (k+4l)-cycle x_1..x_{k+4l} with a
pendant on each of x_1..x_k and, for block i = 0..l-1, a 2-vertex joining
x_{k+4i+1} and x_{k+4i+4}. Cycle vertex x_j has index j-1, the pendant of x_j
has index k+4l-1+j, and the chord vertex of block i has index 2k+4l+i.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph

KINDS = ("tkl", "cycle", "path", "complete_bipartite", "prism5", "petersen", "edgeless", "complete", "prism3")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")

    def label(self) -> str:
        return self.kind + "".join(f"_{p}" for p in self.params)


def _need(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.params) != count:
        raise FamilyError(f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")
    return spec.params


def tkl(k: int, l: int) -> Graph:
    if k < 0 or l < 0:
        raise FamilyError("Tkl requires k >= 0 and l >= 0")
    if k + l < 5:
        raise FamilyError(f"Tkl requires k + l >= 5 (got k={k}, l={l})")
    m = k + 4 * l
    edges = [(j, (j + 1) % m) for j in range(m)]
    for j in range(1, k + 1):
        edges.append((j - 1, m - 1 + j))
    for i in range(l):
        chord = 2 * k + 4 * l + i
        edges.append((k + 4 * i, chord))
        edges.append((k + 4 * i + 3, chord))
    return Graph.from_edges(2 * k + 5 * l, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle requires n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("complete bipartite requires a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(m: int) -> Graph:
    """C_m box K_2: outer cycle 0..m-1, inner cycle m..2m-1, rungs i -- i+m."""
    if m < 3:
        raise FamilyError("prism requires m >= 3")
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((m + i, m + (i + 1) % m))
        edges.append((i, m + i))
    return Graph.from_edges(2 * m, edges)


def petersen() -> Graph:
    # Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def edgeless(n: int) -> Graph:
    if n < 0:
        raise FamilyError("edgeless requires n >= 0")
    return Graph.empty(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete requires n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def build(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if kind == "tkl":
        return tkl(*_need(spec, 2))
    if kind == "cycle":
        return cycle(*_need(spec, 1))
    if kind == "path":
        return path(*_need(spec, 1))
    if kind == "complete_bipartite":
        return complete_bipartite(*_need(spec, 2))
    if kind == "prism5":
        _need(spec, 0)
        return prism(5)
    if kind == "prism3":
        _need(spec, 0)
        return prism(3)
    if kind == "petersen":
        _need(spec, 0)
        return petersen()
    if kind == "edgeless":
        return edgeless(*_need(spec, 1))
    return complete(*_need(spec, 1))


def family_expected_i(spec: FamilySpec) -> int | None:
    """Independent domination number asserted in the literature, or None.

    Used only as a target to check solvers against.
    """
    if spec.kind == "tkl":
        k, l = _need(spec, 2)
        return k + 2 * l
    if spec.kind == "complete_bipartite":
        a, b = _need(spec, 2)
        return a if a == b else None
    if spec.kind == "prism5":
        return 4
    if spec.kind == "edgeless":
        return spec.params[0]
    return None


def tkl_parameters(max_order: int) -> list[tuple[int, int]]:
    """All (k, l) with k + l >= 5 and 2k + 5l <= max_order, sorted."""
    out = []
    for l in range(max_order // 5 + 1):
        for k in range((max_order - 5 * l) // 2 + 1):
            if k + l >= 5:
                out.append((k, l))
    return sorted(out)
