import pytest

from glpaths import exceptions
from glpaths import lgraph
from glpaths import oracle
from glpaths.group import Cyclic, Symmetric
from glpaths.lgraph import Arc, LabeledGraph, Path, Walk
from glpaths.tools import random_instance

from tests.extras import build, f1


def test_accessors():
    g = f1()
    assert g.n_vertices == 3
    assert g.n_arcs == 3
    assert g.neighbors("s") == ["t", "u"]
    assert [a.id for a in g.incident("u")] == [1, 2]
    assert [a.id for a in g.arcs_between("t", "s")] == [0]
    assert g.arc(2).other("t") == "u"
    with pytest.raises(exceptions.ModelError):
        g.arc(7)
    with pytest.raises(exceptions.ModelError):
        g.neighbors("z")


def test_loops_and_duplicate_ids_rejected():
    z3 = Cyclic(3)
    with pytest.raises(exceptions.ModelError):
        LabeledGraph(z3, ["a"], [Arc(0, "a", "a", z3.element(1))])
    with pytest.raises(exceptions.ModelError):
        LabeledGraph(z3, ["a", "b"], [Arc(0, "a", "b", z3.element(1)), Arc(0, "b", "a", z3.element(1))])


def test_add_arc_never_reuses_ids():
    g = f1()
    h = g.remove_arcs([2])
    h, aid = h.add_arc("u", "t", Cyclic(3).element(2), virtual=True)
    assert aid == 3
    assert h.arc(3).virtual
    assert h.n_arcs == 3


def test_walk_label_reads_right_to_left():
    s3 = Symmetric(3)
    a = s3.cycle(1, 2)
    b = s3.cycle(2, 3)
    g = LabeledGraph(s3, ["x", "y", "z"], [Arc(0, "x", "y", a), Arc(1, "y", "z", b)])
    walk = Walk(("x", "y", "z"), (0, 1))
    assert lgraph.walk_label(g, walk) == b * a
    # backwards traversal contributes inverses
    assert lgraph.walk_label(g, walk.reversed()) == ~a * ~b


def test_walk_label_of_f1_paths():
    g = f1()
    z3 = g.group
    assert lgraph.walk_label(g, lgraph.path_from_vertices(g, ["s", "t"])) == z3.element(0)
    assert lgraph.walk_label(g, lgraph.path_from_vertices(g, ["s", "u", "t"])) == z3.element(1)
    assert lgraph.walk_label(g, lgraph.path_from_vertices(g, ["t", "u", "s"])) == z3.element(2)


def test_walks():
    w = Walk(("a", "b"), (4,)) + Walk(("b", "c"), (5,))
    assert w.vertices == ("a", "b", "c")
    assert w.end == "c"
    assert not w.is_closed
    assert str(w) == "a,b,c"
    assert w.to_dict()["arcs"] == [4, 5]
    with pytest.raises(exceptions.ModelError):
        Path(("a", "b", "a"), (1, 2))
    with pytest.raises(exceptions.ModelError):
        Walk(("a", "b"), ())


def test_validate_path():
    g = f1()
    assert lgraph.validate_path(g, Path(("s", "u", "t"), (1, 2)), "s", "t")
    assert not lgraph.validate_path(g, Path(("s", "u", "t"), (0, 2)), "s", "t")
    assert not lgraph.validate_path(g, Path(("s", "u"), (1,)), "s", "t")


def test_iter_st_paths_counts_parallel_choices():
    g = build(Cyclic(3), [("s", "u", 0), ("s", "u", 1), ("u", "t", 0), ("s", "t", 2)])
    paths = list(lgraph.iter_st_paths(g, "s", "t"))
    assert len(paths) == 3
    assert sorted(p.arcs for p in paths) == [(0, 2), (1, 2), (3,)]


def test_dedupe_equivalent_arcs():
    z3 = Cyclic(3)
    g = build(z3, [("a", "b", 1), ("b", "a", 2), ("a", "b", 1), ("a", "b", 2)])
    h = lgraph.dedupe_equivalent_arcs(g)
    assert [a.id for a in h.arcs] == [0, 3]
    assert lgraph.find_equivalent_arc(h, "b", "a", z3.element(2)) == 0
    assert lgraph.find_equivalent_arc(h, "a", "b", z3.element(0)) is None


def test_normalize_to_D_drops_dangling_parts():
    g = build(Cyclic(3), [("s", "u", 0), ("u", "t", 1), ("s", "t", 0), ("t", "x", 2), ("x", "y", 1), ("y", "t", 1)])
    h = lgraph.normalize_to_D(g, "s", "t")
    assert sorted(h.vertices) == ["s", "t", "u"]
    assert h.n_arcs == 3


def test_normalize_to_D_disconnected_terminals():
    g = build(Cyclic(3), [("s", "u", 0), ("t", "v", 1)])
    h = lgraph.normalize_to_D(g, "s", "t")
    assert h.n_arcs == 0


def test_orient_around_terminals():
    g = build(Cyclic(3), [("u", "s", 1), ("t", "u", 1), ("t", "s", 2)])
    h = lgraph.orient_around_terminals(g, "s", "t")
    assert h.arc(0).ends == ("s", "u")
    assert h.arc(0).label.payload == 2
    assert h.arc(1).ends == ("u", "t")
    assert h.arc(2).ends == ("s", "t")
    assert h.arc(2).label.payload == 1
    for path in lgraph.iter_st_paths(g, "s", "t"):
        assert lgraph.walk_label(g, path) == lgraph.walk_label(h, path)


def test_has_triple_parallel():
    g = build(Cyclic(3), [("s", "t", 0), ("t", "s", 1), ("s", "t", 2)])
    assert lgraph.has_triple_parallel(g)
    assert not lgraph.has_triple_parallel(g.remove_arcs([1]))


@pytest.mark.parametrize("seed", range(100))
def test_iter_st_paths_agrees_with_oracle(seed):
    g, s, t = random_instance(seed, n_vertices=5 + seed % 3, n_arcs=8 + seed % 4, normalized=False)
    found = {(p.vertices, p.arcs) for p in lgraph.iter_st_paths(g, s, t)}
    truth = {(p.vertices, p.arcs) for p in oracle.enumerate_st_paths(g, s, t)}
    assert found == truth


@pytest.mark.parametrize("seed", range(150))
def test_normalize_to_D_keeps_labels(seed):
    group, cap = (Cyclic(3), 3) if seed % 2 else (Symmetric(3), 6)
    g, s, t = random_instance(seed, n_vertices=6, n_arcs=8 + seed % 5, group=group, normalized=False)
    h = lgraph.normalize_to_D(g, s, t)
    assert lgraph.normalize_to_D(h, s, t) == h
    assert oracle.label_set_bruteforce(h, s, t, cap=cap) == oracle.label_set_bruteforce(g, s, t, cap=cap)


@pytest.mark.parametrize("seed", range(100))
def test_dedupe_and_orient_keep_labels(seed):
    g, s, t = random_instance(seed, n_vertices=5, n_arcs=9, group=Symmetric(3), normalized=False)
    truth = oracle.label_set_bruteforce(g, s, t, cap=6)
    assert oracle.label_set_bruteforce(lgraph.dedupe_equivalent_arcs(g), s, t, cap=6) == truth
    h = lgraph.orient_around_terminals(g, s, t)
    assert oracle.label_set_bruteforce(h, s, t, cap=6) == truth
    assert all(a.tail == s for a in h.arcs if s in a.ends)
    assert all(a.head == t for a in h.arcs if t in a.ends and s not in a.ends)
