"""
Disjoint-paths problems as group-labeled path problems.

Two disjoint paths s1-t1 and s2-t2 exist iff the cyclic(3) graph with all edges labeled 0 and one
extra arc t1->s2 labeled 1 has an s1-t2 path of label 1.
"""
import logging

from glpaths import exceptions
from glpaths.base_model import GlpObject
from glpaths.group import Cyclic, Symmetric
from glpaths.lgraph import Arc, LabeledGraph, Path
from glpaths.results import Infeasible
from glpaths.solve import z3_labels

logger = logging.getLogger(__name__)


class ReducedInstance(GlpObject):
    """
    A labeled s-t path instance built from a disjoint-paths instance

    Parameters
    ----------
    graph: LabeledGraph
    s, t: vertices
    target: GroupElement
        The disjoint paths exist iff an s-t path has this label
    special_arcs: list of int
        Ids of the added arcs t_i -> s_(i+1), in order
    """
    op_type = "reduced_instance"

    def __init__(self, graph, s, t, target, special_arcs):
        self.graph = graph
        self.s = s
        self.t = t
        self.target = target
        self.special_arcs = list(special_arcs)


def _check_distinct(terminals):
    if len(set(terminals)) != len(terminals):
        raise exceptions.PreconditionError(f"terminals must be distinct, got {list(terminals)}")


def _relabel(graph, group, terminals, label_of_pair):
    for v in terminals:
        graph.check_vertex(v)
    one = group.identity()
    g = LabeledGraph(group, graph.vertices, [Arc(a.id, a.tail, a.head, one) for a in graph.arcs],
                     next_arc_id=graph.next_arc_id)
    special = []
    for i, (u, v) in enumerate(zip(terminals[1::2], terminals[2::2])):
        g, aid = g.add_arc(u, v, label_of_pair(i + 1))
        special.append(aid)
    return g, special


def reduce_2disjoint(graph, s1, t1, s2, t2):
    """
    The cyclic(3) instance (G', s1, t2) with target label 1

    Arc directions and ids of `graph` are kept; its labels are ignored.
    """
    terminals = [s1, t1, s2, t2]
    _check_distinct(terminals)
    group = Cyclic(3)
    g, special = _relabel(graph, group, terminals, lambda i: group.element(1))
    return ReducedInstance(g, s1, t2, group.element(1), special)


def solve_2disjoint(graph, s1, t1, s2, t2, si=None):
    """
    Two vertex-disjoint paths joining s1 to t1 and s2 to t2, or Infeasible

    Returns
    -------
    (Path, Path) or Infeasible
    """
    inst = reduce_2disjoint(graph, s1, t1, s2, t2)
    summary = z3_labels(inst.graph, inst.s, inst.t, si=si)
    if inst.target not in summary.labels:
        logger.debug("label 1 is not an s1-t2 label; paths do not exist")
        return Infeasible(f"no disjoint {s1}-{t1} and {s2}-{t2} paths")
    witness = summary.witnesses[summary.labels.index(inst.target)]
    special = inst.special_arcs[0]
    if witness.arcs.count(special) != 1:
        raise exceptions.PreconditionError(f"label-1 witness {witness} does not use the arc {t1}->{s2} once")
    i = witness.arcs.index(special)
    if witness.vertices[i] != t1:
        raise exceptions.PreconditionError(f"label-1 witness {witness} traverses {t1}->{s2} backwards")
    first = Path(witness.vertices[:i + 1], witness.arcs[:i])
    second = Path(witness.vertices[i + 1:], witness.arcs[i + 1:])
    return first, second


def kdisjoint_target(k):
    """
    The permutation an s1-tk path must realize in the k-pair instance

    It is the product of the special arc labels in path order,
    (2k-3 2k-1 2k-2) ... (3 5 4)(1 3 2), and maps 1 to 2k-1.
    """
    if k < 2:
        raise exceptions.PreconditionError(f"k must be at least 2, not {k}")
    group = Symmetric(2 * k - 1)
    cycles = [group.cycle(2 * i - 1, 2 * i + 1, 2 * i) for i in range(1, k)]
    return group.product(reversed(cycles))


def reduce_kdisjoint(graph, pairs):
    """
    The alternating-group instance for k disjoint paths (instance construction only)

    Parameters
    ----------
    graph: LabeledGraph
        Labels are ignored
    pairs: list of (s_i, t_i)
    """
    k = len(pairs)
    if k < 2:
        raise exceptions.PreconditionError(f"k-disjoint reduction needs at least two pairs, got {k}")
    terminals = [v for pair in pairs for v in pair]
    _check_distinct(terminals)
    group = Symmetric(2 * k - 1)
    g, special = _relabel(graph, group, terminals, lambda i: group.cycle(2 * i - 1, 2 * i + 1, 2 * i))
    return ReducedInstance(g, pairs[0][0], pairs[-1][1], kdisjoint_target(k), special)
