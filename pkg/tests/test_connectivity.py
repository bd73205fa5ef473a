import itertools

import networkx as nx
import numpy as np
import pytest

from glpaths import connectivity
from glpaths import lgraph
from glpaths.group import Cyclic
from glpaths.results import Infeasible
from glpaths.tools import random_unlabeled_graph

from tests.extras import build, complete_graph, cycle_graph


def test_c6_disconnecting_triples():
    g = cycle_graph(6)
    cuts = connectivity.enumerate_3cuts(g)
    # a triple fails to disconnect C6 only when the other three vertices are consecutive
    assert len(cuts) == 14
    brute = 0
    for triple in itertools.combinations(g.sorted_vertices(), 3):
        if len(connectivity.components(g, triple)) > 1:
            brute += 1
    assert brute == 14


def test_find_2cut():
    assert connectivity.find_2cut(cycle_graph(5)) == ("v0", "v2")
    assert connectivity.find_2cut(complete_graph(4)) is None
    assert connectivity.is_three_connected(complete_graph(4))
    assert not connectivity.is_three_connected(cycle_graph(5))


def test_components_ordering():
    g = build(Cyclic(1), [("b", "c", 0), ("a", "d", 0), ("c", "e", 0)])
    assert connectivity.components(g) == [["a", "d"], ["b", "c", "e"]]
    assert connectivity.components(g, ["c"]) == [["a", "d"], ["b"], ["e"]]
    assert connectivity.open_neighborhood(g, ["c"]) == {"b", "e"}


def test_vertex_disjoint_paths():
    g = cycle_graph(6)
    paths = connectivity.vertex_disjoint_paths(g, ["v0", "v1"], ["v3", "v4"], 2)
    assert len(paths) == 2
    used = [v for p in paths for v in p.vertices]
    assert len(used) == len(set(used))
    assert {p.start for p in paths} == {"v0", "v1"}
    assert {p.end for p in paths} == {"v3", "v4"}


def test_vertex_disjoint_paths_shared_vertex():
    g = cycle_graph(4)
    paths = connectivity.vertex_disjoint_paths(g, ["v0", "v2"], ["v0", "v1"], 2)
    assert len(paths) == 2
    assert any(p.vertices == ("v0",) for p in paths)


def test_vertex_disjoint_paths_infeasible():
    g = build(Cyclic(1), [("a", "c", 0), ("b", "c", 0), ("c", "d", 0), ("c", "e", 0)])
    found = connectivity.vertex_disjoint_paths(g, ["a", "b"], ["d", "e"], 2)
    assert isinstance(found, Infeasible)
    assert not found


def _has_separator(graph, sources, sinks, size):
    """Some vertex set of `size` meets every source-sink path"""
    for removed in itertools.combinations(graph.vertices, size):
        h = graph.remove_vertices(removed).to_networkx()
        left = [v for v in sources if v in h]
        right = [v for v in sinks if v in h]
        if not any(nx.has_path(h, u, v) for u in left for v in right):
            return True
    return False


@pytest.mark.parametrize("seed", range(150))
def test_vertex_disjoint_paths_menger(seed):
    rng = np.random.default_rng(seed)
    g = random_unlabeled_graph(rng, 6 + seed % 3, 6 + seed % 8)
    names = list(g.vertices)
    sources = [names[int(i)] for i in rng.choice(len(names), size=2 + seed % 2, replace=False)]
    sinks = [names[int(i)] for i in rng.choice(len(names), size=2 + seed % 2, replace=False)]
    k = 1 + seed % 3
    found = connectivity.vertex_disjoint_paths(g, sources, sinks, k)
    blocked = any(_has_separator(g, sources, sinks, size) for size in range(k))
    assert isinstance(found, Infeasible) == blocked
    if not blocked:
        assert len(found) == k
        used = set()
        for path in found:
            assert path.start in sources
            assert path.end in sinks
            assert lgraph.validate_path(g, path, path.start, path.end)
            assert not used & set(path.vertices)
            used |= set(path.vertices)


@pytest.mark.parametrize("seed", range(100))
def test_find_2cut_is_exhaustive(seed):
    g = random_unlabeled_graph(np.random.default_rng(seed), 6, 7 + seed % 9)
    h = g.to_networkx()
    separating = []
    for pair in itertools.combinations(sorted(g.vertices), 2):
        rest = h.subgraph([v for v in g.vertices if v not in pair])
        if not nx.is_connected(rest):
            separating.append(pair)
    found = connectivity.find_2cut(g)
    if found is None:
        assert separating == []
    else:
        assert found == separating[0]
