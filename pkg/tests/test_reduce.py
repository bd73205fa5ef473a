import numpy as np
import pytest

from glpaths import exceptions
from glpaths import lgraph
from glpaths import oracle
from glpaths import reduce
from glpaths.group import Cyclic, Symmetric, permutation_parity
from glpaths.results import Infeasible
from glpaths.tools import random_unlabeled_graph

from tests.extras import load

pytestmark = pytest.mark.usefixtures("checked_embeddings")


def assert_disjoint_solution(graph, pairs, paths):
    assert len(paths) == len(pairs)
    used = set()
    for (s, t), path in zip(pairs, paths):
        assert lgraph.validate_path(graph, path, s, t)
        assert not used & set(path.vertices)
        used |= set(path.vertices)


def test_reduce_2disjoint_k4():
    g = load('k4_terminals.glg')
    inst = reduce.reduce_2disjoint(g, "s1", "t1", "s2", "t2")
    assert inst.graph.group == Cyclic(3)
    assert inst.special_arcs == [6]
    special = inst.graph.arc(6)
    assert (special.tail, special.head, special.label.payload) == ("t1", "s2", 1)
    assert all(inst.graph.arc(i).label.is_identity for i in range(6))
    assert (inst.s, inst.t, inst.target.payload) == ("s1", "t2", 1)
    assert inst.to_dict()["type"] == "reduced_instance"


def test_solve_2disjoint_fixtures():
    pairs = [("s1", "t1"), ("s2", "t2")]
    for name in ['k4_terminals.glg', 'line4.glg']:
        g = load(name)
        found = reduce.solve_2disjoint(g, "s1", "t1", "s2", "t2")
        assert_disjoint_solution(g, pairs, found)
    found = reduce.solve_2disjoint(load('c4_interleaved.glg'), "s1", "t1", "s2", "t2")
    assert isinstance(found, Infeasible)


def test_duplicate_terminals():
    g = load('k4_terminals.glg')
    with pytest.raises(exceptions.PreconditionError):
        reduce.reduce_2disjoint(g, "s1", "t1", "s1", "t2")
    with pytest.raises(exceptions.PreconditionError):
        reduce.reduce_kdisjoint(g, [("s1", "t1"), ("t1", "t2")])
    with pytest.raises(exceptions.ModelError):
        reduce.reduce_2disjoint(g, "s1", "t1", "s2", "nope")


@pytest.mark.parametrize("seed", range(500))
def test_solve_2disjoint_matches_bruteforce(seed):
    rng = np.random.default_rng(seed)
    n = 5 + seed % 4
    g = random_unlabeled_graph(rng, n, n + 1 + seed % 6)
    s1, t1, s2, t2 = ['v%i' % i for i in rng.choice(n, size=4, replace=False)]
    pairs = [(s1, t1), (s2, t2)]
    found = reduce.solve_2disjoint(g, s1, t1, s2, t2)
    truth = oracle.disjoint_paths_bruteforce(g, pairs)
    assert bool(found) == bool(truth)
    if found:
        assert_disjoint_solution(g, pairs, found)


def test_kdisjoint_target():
    s3 = Symmetric(3)
    assert reduce.kdisjoint_target(2) == s3.cycle(1, 3, 2)
    target = reduce.kdisjoint_target(3)
    assert target.group == Symmetric(5)
    assert target.payload[0] == 5
    assert permutation_parity(target) == 0
    with pytest.raises(exceptions.PreconditionError):
        reduce.kdisjoint_target(1)


def test_reduce_kdisjoint():
    g = load('k4_terminals.glg')
    inst = reduce.reduce_kdisjoint(g, [("s1", "t1"), ("s2", "t2")])
    assert inst.graph.group == Symmetric(3)
    assert inst.special_arcs == [6]
    assert inst.graph.arc(6).label == Symmetric(3).cycle(1, 3, 2)
    assert all(permutation_parity(a.label) == 0 for a in inst.graph.arcs)
    assert (inst.s, inst.t) == ("s1", "t2")
    with pytest.raises(exceptions.PreconditionError):
        reduce.reduce_kdisjoint(g, [("s1", "t1")])


def test_reduce_kdisjoint_target_realized():
    # a path graph s1-t1-s2-t2-s3-t3 has exactly one s1-t3 path
    g = lgraph.LabeledGraph(Cyclic(1), ["s1", "t1", "s2", "t2", "s3", "t3"], [])
    for u, v in [("s1", "t1"), ("s2", "t2"), ("s3", "t3")]:
        g, _ = g.add_arc(u, v, Cyclic(1).identity())
    inst = reduce.reduce_kdisjoint(g, [("s1", "t1"), ("s2", "t2"), ("s3", "t3")])
    paths = list(lgraph.iter_st_paths(inst.graph, "s1", "t3"))
    assert len(paths) == 1
    assert lgraph.walk_label(inst.graph, paths[0]) == inst.target
