"""Naive enumeration oracles built only on networkx."""
import networkx as nx

from cubicdom.graph import Graph, has_four_cycle


def to_nx(g):
    G = nx.empty_graph(g.order)
    G.add_edges_from(g.edges())
    return G


def iso_classes(graphs):
    """Group networkx graphs into isomorphism classes (WL hash buckets, then VF2)."""
    buckets = {}
    for G in graphs:
        key = (G.number_of_nodes(), G.number_of_edges(), nx.weisfeiler_lehman_graph_hash(G))
        reps = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(G, H) for H in reps):
            reps.append(G)
    return [H for reps in buckets.values() for H in reps]


def labelled_cubic(n):
    """Every labelled cubic graph on n vertices: fill the lowest deficient vertex."""
    out = []

    def fill(edges, deg):
        v = next((u for u in range(n) if deg[u] < 3), None)
        if v is None:
            out.append(list(edges))
            return
        last = max((b for a, b in edges if a == v), default=v)
        for w in range(last + 1, n):
            if deg[w] < 3 and (v, w) not in edges:
                deg[v] += 1
                deg[w] += 1
                edges.add((v, w))
                fill(edges, deg)
                edges.discard((v, w))
                deg[v] -= 1
                deg[w] -= 1

    fill(set(), [0] * n)
    return out


def naive_cubic_counts(n):
    graphs = []
    for edges in labelled_cubic(n):
        G = nx.empty_graph(n)
        G.add_edges_from(edges)
        graphs.append(G)
    classes = iso_classes(graphs)
    return len(classes), sum(nx.is_connected(G) for G in classes)


def atlas_counts(n, forbid_c4=False):
    count = 0
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() != n or (n and max(d for _, d in G.degree()) > 3):
            continue
        if forbid_c4 and has_four_cycle(Graph.from_edges(n, G.edges())):
            continue
        count += 1
    return count
