import pytest

from glpaths import exceptions
from glpaths import lgraph
from glpaths import oracle
from glpaths.group import Cyclic, Symmetric
from glpaths.results import Infeasible
from glpaths.tools import random_instance

from tests.extras import build, complete_graph, f1, load


def test_enumerate_f1():
    paths = oracle.enumerate_st_paths(f1(), "s", "t")
    assert sorted(p.arcs for p in paths) == [(0,), (1, 2)]


@pytest.mark.parametrize("n, expected", [(3, 2), (4, 5), (5, 16)])
def test_complete_graph_path_count(n, expected):
    g = complete_graph(n)
    assert len(oracle.enumerate_st_paths(g, "v0", "v1")) == expected


def test_enumerate_visitor_stops():
    g = load('triple_parallel.glg')
    assert oracle.enumerate_st_paths(g, "s", "t", visitor=lambda p: True) == 1
    assert oracle.enumerate_st_paths(g, "s", "t", visitor=lambda p: False) == 3


def test_enumerate_bad_terminals():
    with pytest.raises(exceptions.ModelError):
        oracle.enumerate_st_paths(f1(), "s", "s")
    with pytest.raises(exceptions.ModelError):
        oracle.enumerate_st_paths(f1(), "s", "nope")


def test_paths_are_valid():
    g = complete_graph(5, group=Cyclic(3))
    for path in oracle.enumerate_st_paths(g, "v0", "v4"):
        assert lgraph.validate_path(g, path, "v0", "v4")


def test_label_set():
    z3 = Cyclic(3)
    assert oracle.label_set_bruteforce(f1(), "s", "t") == {z3.element(0), z3.element(1)}
    g = load('triple_parallel.glg')
    assert len(oracle.label_set_bruteforce(g, "s", "t", cap=3)) == 3
    assert len(oracle.label_set_bruteforce(g, "s", "t", cap=1)) == 2
    with pytest.raises(ValueError):
        oracle.label_set_bruteforce(g, "s", "t", cap=0)


def test_label_set_reads_arcs_backwards():
    z3 = Cyclic(3)
    g = build(z3, [("u", "s", 1), ("u", "t", 1)])
    assert oracle.label_set_bruteforce(g, "s", "t") == {z3.element(0)}
    g = build(z3, [("s", "u", 1), ("t", "u", 2)])
    assert oracle.label_set_bruteforce(g, "s", "t") == {z3.element(2)}


def test_simple_cycles():
    assert len(list(oracle.iter_simple_cycles(complete_graph(4)))) == 7
    cycles = list(oracle.iter_simple_cycles(load('f3_digon.glg')))
    assert len(cycles) == 1
    assert str(cycles[0]) == "x,y,x"
    assert cycles[0].arcs == (1, 0)
    assert list(oracle.iter_simple_cycles(f1().remove_arcs([0]))) == []


def test_all_cycles_balanced():
    assert not oracle.all_cycles_balanced(load('f3_digon.glg'))
    assert not oracle.all_cycles_balanced(f1())
    assert oracle.all_cycles_balanced(complete_graph(5))
    g = build(Cyclic(3), [("s", "a", 1), ("a", "t", 1), ("s", "b", 0), ("b", "t", 2)])
    assert oracle.all_cycles_balanced(g)


def test_self_inverse_unbalanced_cycle():
    z2 = Cyclic(2)
    assert oracle.self_inverse_unbalanced_cycle_exists(build(z2, [("x", "y", 0), ("x", "y", 1)]))
    assert not oracle.self_inverse_unbalanced_cycle_exists(load('f3_digon.glg'))
    assert not oracle.self_inverse_unbalanced_cycle_exists(complete_graph(4))


def test_disjoint_paths():
    found = oracle.disjoint_paths_bruteforce(load('k4_terminals.glg'), [("s1", "t1"), ("s2", "t2")])
    assert [p.arcs for p in found] == [(0,), (5,)]
    found = oracle.disjoint_paths_bruteforce(load('line4.glg'), [("s1", "t1"), ("s2", "t2")])
    assert [p.vertices for p in found] == [("s1", "t1"), ("s2", "t2")]
    assert isinstance(oracle.disjoint_paths_bruteforce(load('c4_interleaved.glg'), [("s1", "t1"), ("s2", "t2")]),
                      Infeasible)


def test_disjoint_paths_terminals_block_routes():
    # the only s1-t1 route passes through s2
    g = build(Cyclic(1), [("s1", "s2", 0), ("s2", "t1", 0), ("s2", "t2", 0)])
    assert not oracle.disjoint_paths_bruteforce(g, [("s1", "t1"), ("s2", "t2")])
    assert not oracle.disjoint_paths_bruteforce(g, [("s1", "t1"), ("s1", "t2")])
    with pytest.raises(exceptions.ModelError):
        oracle.disjoint_paths_bruteforce(g, [("s1", "t1"), ("s2", "x")])


@pytest.mark.parametrize("case", range(300))
def test_two_labels_commute_iff_no_self_inverse_cycle(case):
    group = [Cyclic(4), Symmetric(3), Cyclic(6)][case % 3]
    for seed in range(40 * case, 40 * case + 40):
        g, s, t = random_instance(seed, n_vertices=5 + seed % 3, n_arcs=7 + seed % 4, group=group)
        truth = oracle.label_set_bruteforce(g, s, t, cap=3)
        if len(truth) == 2:
            break
    else:
        pytest.skip("no two-label instance in this seed range")
    alpha, beta = truth
    assert (alpha * ~beta != beta * ~alpha) == (not oracle.self_inverse_unbalanced_cycle_exists(g))
