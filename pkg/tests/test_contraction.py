import pytest

from glpaths import cc
from glpaths import contraction
from glpaths import exceptions
from glpaths import lgraph
from glpaths import oracle
from glpaths.group import Cyclic
from glpaths.lgraph import Path
from glpaths.tools import random_instance

from tests.extras import build, complete_graph


def split_graph():
    return build(Cyclic(3), [("s", "x", 0), ("s", "t", 0), ("x", "a", 1), ("a", "y", 0), ("x", "b", 0),
                             ("b", "y", 0), ("y", "t", 0)])


def star_graph():
    return build(Cyclic(3), [("x", "a", 1), ("x", "b", 1), ("x", "c", 2), ("s", "a", 0), ("s", "b", 0),
                             ("c", "t", 0), ("a", "t", 1), ("s", "t", 0)])


def assert_expansions_valid(original, contracted, records, s, t):
    for path in oracle.enumerate_st_paths(contracted, s, t):
        expanded = contraction.expand_path(records, path)
        assert lgraph.validate_path(original, expanded, s, t)
        assert lgraph.walk_label(original, expanded) == lgraph.walk_label(contracted, path)


def test_boundary_subgraph():
    g = build(Cyclic(3), [("x", "a", 1), ("a", "y", 0), ("x", "y", 2), ("y", "t", 0)])
    inner = contraction.boundary_subgraph(g, {"a"})
    assert sorted(inner.vertices) == ["a", "x", "y"]
    assert [arc.id for arc in inner.arcs] == [0, 1]


def test_two_contract_with_given_witness():
    g = split_graph()
    z3 = g.group
    witness = Path(("x", "a", "y"), (2, 3))
    h, record = contraction.two_contract(g, "s", "t", {"a"}, [(z3.element(1), witness)])
    assert not h.has_vertex("a")
    assert record.kind == cc.TWO_CONTRACTION
    assert record.boundary == ("x", "y")
    assert [a.arc_id for a in record.added] == [7]
    assert h.arc(7).label == z3.element(1)
    assert oracle.label_set_bruteforce(g, "s", "t", 5) == oracle.label_set_bruteforce(h, "s", "t", 5)
    expanded = contraction.expand_path([record], Path(("s", "x", "y", "t"), (0, 7, 6)))
    assert expanded.vertices == ("s", "x", "a", "y", "t")
    assert_expansions_valid(g, h, [record], "s", "t")


def test_two_contract_exhaustive():
    g = split_graph()
    assert contraction.find_2contractible(g, "s", "t") == {"a", "b", "x"}
    h, record = contraction.two_contract_exhaustive(g, "s", "t", {"a", "b", "x"})
    assert sorted(h.vertices) == ["s", "t", "y"]
    assert len(record.added) == 2
    assert oracle.label_set_bruteforce(g, "s", "t", 5) == oracle.label_set_bruteforce(h, "s", "t", 5)
    assert_expansions_valid(g, h, [record], "s", "t")


def test_two_contract_rejects_bad_input():
    g = split_graph()
    z3 = g.group
    witness = Path(("x", "a", "y"), (2, 3))
    with pytest.raises(exceptions.PreconditionError):
        contraction.two_contract(g, "s", "t", {"a"}, [(z3.element(2), witness)])
    with pytest.raises(exceptions.PreconditionError):
        contraction.two_contract(g, "s", "t", {"s"}, [(z3.element(1), witness)])
    with pytest.raises(exceptions.PreconditionError):
        contraction.two_contract(g, "s", "t", {"x"}, [(z3.element(1), witness)])


def test_three_contract():
    g = star_graph()
    assert contraction.find_3contractible(g, "s", "t") == {"x"}
    h, record = contraction.three_contract(g, "s", "t", {"x"})
    assert record.kind == cc.THREE_CONTRACTION
    assert record.boundary == ("a", "b", "c")
    assert len(record.triangle) == 3
    assert sorted(record.triangle.values(), key=sorted) == [frozenset("ab"), frozenset("ac"), frozenset("bc")]
    assert not h.has_vertex("x")
    assert oracle.label_set_bruteforce(g, "s", "t", 5) == oracle.label_set_bruteforce(h, "s", "t", 5)
    assert_expansions_valid(g, h, [record], "s", "t")


def test_three_contract_needs_balanced_boundary():
    g = star_graph()
    g, _ = g.add_arc("x", "a", g.group.element(0))
    assert contraction.find_3contractible(g, "s", "t") is None
    with pytest.raises(exceptions.PreconditionError):
        contraction.three_contract(g, "s", "t", {"x"})


def test_find_3contractible_k4():
    g = complete_graph(4, names=["a", "b", "s", "t"])
    assert contraction.find_3contractible(g, "s", "t") == {"b"}


@pytest.mark.parametrize("seed", range(500))
def test_contractions_preserve_labels(seed):
    g, s, t = random_instance(seed, n_vertices=7, n_arcs=11)
    if not g.arcs:
        return
    before = oracle.label_set_bruteforce(g, s, t, cap=9)
    found = contraction.find_2contractible(g, s, t)
    if found is not None:
        h, record = contraction.two_contract_exhaustive(g, s, t, found)
        assert oracle.label_set_bruteforce(h, s, t, cap=9) == before
        assert_expansions_valid(g, h, [record], s, t)
    found = contraction.find_3contractible(g, s, t)
    if found is not None:
        h, record = contraction.three_contract(g, s, t, found)
        assert oracle.label_set_bruteforce(h, s, t, cap=9) == before
        assert_expansions_valid(g, h, [record], s, t)
