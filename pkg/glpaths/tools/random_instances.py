import itertools

import numpy as np

from glpaths.group import Cyclic
from glpaths.lgraph import Arc, LabeledGraph, normalize_to_D


def random_graph(rng, group, n_vertices, n_arcs, names=None):
    """
    A random labeled multigraph (parallel arcs allowed, no loops)

    Parameters
    ----------
    rng: numpy.random.Generator
    group: glpaths.group.GroupSpec
    n_vertices: int
        At least 2
    n_arcs: int
    names: list of str, optional
        Vertex names; 's', 't', 'v2', 'v3', ... by default

    Returns
    -------
    LabeledGraph
    """
    if n_vertices < 2:
        raise ValueError(f"n_vertices must be at least 2, not {n_vertices}")
    if names is None:
        names = ['s', 't'] + ['v%i' % i for i in range(2, n_vertices)]
    arcs = []
    for i in range(n_arcs):
        tail, head = rng.choice(n_vertices, size=2, replace=False)
        arcs.append(Arc(i, names[int(tail)], names[int(head)], group.random_element(rng)))
    return LabeledGraph(group, names, arcs)


def random_instance(seed, n_vertices=6, n_arcs=10, group=None, normalized=True):
    """
    A reproducible random s-t instance

    Returns
    -------
    (LabeledGraph, 's', 't')
        With `normalized`, the graph is reduced to the part where every vertex lies on an s-t path.
    """
    if group is None:
        group = Cyclic(3)
    rng = np.random.default_rng(seed)
    g = random_graph(rng, group, n_vertices, n_arcs)
    if normalized:
        g = normalize_to_D(g, 's', 't')
    return g, 's', 't'


def random_unlabeled_graph(rng, n_vertices, n_edges):
    """A random simple graph on v0, v1, ... with identity labels in the trivial group"""
    group = Cyclic(1)
    names = ['v%i' % i for i in range(n_vertices)]
    pairs = list(itertools.combinations(range(n_vertices), 2))
    n_edges = min(n_edges, len(pairs))
    chosen = sorted(rng.choice(len(pairs), size=n_edges, replace=False)) if n_edges else []
    arcs = [Arc(i, names[pairs[int(k)][0]], names[pairs[int(k)][1]], group.identity()) for i, k in enumerate(chosen)]
    return LabeledGraph(group, names, arcs)
