"""
Cuts and vertex-disjoint routing.
"""
import itertools

import networkx as nx

from glpaths.lgraph import path_from_vertices, vertex_key
from glpaths.results import Infeasible

_SOURCE = ("__source__",)
_SINK = ("__sink__",)


def vertex_disjoint_paths(graph, sources, sinks, k):
    """
    Finds `k` vertex-disjoint paths from distinct sources to distinct sinks

    Parameters
    ----------
    graph: glpaths.LabeledGraph
    sources: iterable of vertices
    sinks: iterable of vertices
    k: int
        Number of paths required

    Returns
    -------
    list of Path or Infeasible
        Each path starts at its only source vertex and ends at its only sink vertex.
        A vertex in both sets yields a single-vertex path.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, not {k}")
    sources = sorted(set(sources), key=vertex_key)
    sinks = sorted(set(sinks), key=vertex_key)
    if len(sources) < k or len(sinks) < k:
        return Infeasible(f"fewer than {k} sources or sinks")
    h = graph.to_networkx()
    h.add_edges_from((_SOURCE, v) for v in sources)
    h.add_edges_from((v, _SINK) for v in sinks)
    try:
        raw = list(nx.node_disjoint_paths(h, _SOURCE, _SINK, cutoff=k))
    except nx.NetworkXNoPath:
        return Infeasible("no source reaches a sink")
    if len(raw) < k:
        return Infeasible(f"a separator of size {len(raw)} < {k} exists")
    source_set = set(sources)
    sink_set = set(sinks)
    paths = []
    for route in raw[:k]:
        route = route[1:-1]
        j = next(i for i, v in enumerate(route) if v in sink_set)
        i = max(i for i in range(j + 1) if route[i] in source_set)
        paths.append(path_from_vertices(graph, route[i:j + 1]))
    return paths


def separates(graph, removed, h=None):
    """True if deleting `removed` leaves at least two vertices that are not all connected"""
    if h is None:
        h = graph.to_networkx()
    removed = set(removed)
    rest = h.subgraph([v for v in graph.vertices if v not in removed])
    return rest.number_of_nodes() >= 2 and not nx.is_connected(rest)


def find_2cut(graph):
    """Lexicographically first vertex pair whose removal disconnects the graph, else None"""
    h = graph.to_networkx()
    for pair in itertools.combinations(graph.sorted_vertices(), 2):
        if separates(graph, pair, h):
            return pair
    return None


def enumerate_3cuts(graph):
    h = graph.to_networkx()
    return [triple for triple in itertools.combinations(graph.sorted_vertices(), 3) if separates(graph, triple, h)]


def is_three_connected(graph):
    if graph.n_vertices < 4 or not graph.is_connected():
        return False
    h = graph.to_networkx()
    if any(separates(graph, [v], h) for v in graph.vertices):
        return False
    return find_2cut(graph) is None


def components(graph, removed=()):
    """Connected components of graph - removed, each sorted, ordered by their smallest vertex"""
    removed = set(removed)
    h = graph.to_networkx().subgraph([v for v in graph.vertices if v not in removed])
    comps = [sorted(c, key=vertex_key) for c in nx.connected_components(h)]
    return sorted(comps, key=lambda c: vertex_key(c[0]))


def open_neighborhood(graph, vertex_set):
    """N(X): vertices outside X adjacent to X"""
    vertex_set = set(vertex_set)
    out = set()
    for v in vertex_set:
        out.update(graph.neighbors(v))
    return out - vertex_set
