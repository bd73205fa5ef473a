"""
Shifting, spanning-tree normalization and balancedness.

Shifting at v by alpha multiplies every arc entering v on the left by alpha and every arc leaving v
on the right by alpha^-1. Labels of walks whose ends both differ from v are unchanged.
"""
import logging

import networkx as nx

from glpaths import exceptions
from glpaths.connectivity import components, vertex_disjoint_paths
from glpaths.lgraph import (Arc, Walk, arc_traverse_label, check_terminals, normalize_to_D, path_from_vertices,
                            walk_label)
from glpaths.results import Contained, Infeasible

logger = logging.getLogger(__name__)


def shift(graph, v, alpha):
    graph.check_vertex(v)
    graph.group.check(alpha)
    new = []
    for arc in graph.incident(v):
        if arc.head == v:
            label = alpha * arc.label
        else:
            label = arc.label * ~alpha
        new.append(Arc(arc.id, arc.tail, arc.head, label, arc.virtual))
    return graph.replace_arcs(new)


def apply_shifts(graph, shifts):
    """Applies a shift at every vertex in the dict `shifts` (vertex -> element) at once"""
    one = graph.group.identity()
    new = []
    for arc in graph.arcs:
        label = shifts.get(arc.head, one) * arc.label * ~shifts.get(arc.tail, one)
        new.append(Arc(arc.id, arc.tail, arc.head, label, arc.virtual))
    return graph.replace_arcs(new)


def bfs_tree(graph, root):
    """
    Breadth-first spanning tree of the component of `root`

    Neighbours are visited in order of the lowest arc id joining them, and that arc is the tree arc.

    Returns
    -------
    parent: dict
        vertex -> id of the tree arc towards the root (None for the root)
    order: list
        vertices in visiting order
    """
    h = graph.to_networkx()
    parent = {root: None}
    order = [root]
    for u, w in nx.bfs_edges(h, root):
        parent[w] = h.edges[u, w]["id"]
        order.append(w)
    return parent, order


def tree_potentials(graph, root, tree=None):
    """Label of the tree walk from each reached vertex to `root`"""
    parent, order = bfs_tree(graph, root) if tree is None else tree
    pot = {root: graph.group.identity()}
    for w in order[1:]:
        arc = graph.arc(parent[w])
        p = arc.other(w)
        pot[w] = pot[p] * arc_traverse_label(graph, arc.id, p)
    return pot


def tree_walk_to_root(graph, parent, v):
    vertices = [v]
    arcs = []
    while parent[vertices[-1]] is not None:
        aid = parent[vertices[-1]]
        arcs.append(aid)
        vertices.append(graph.arc(aid).other(vertices[-1]))
    return vertices, arcs


def fundamental_cycle(graph, parent, arc_id):
    """Closed walk: the non-tree arc tail->head, then tree paths head->lca->tail"""
    arc = graph.arc(arc_id)
    u_vs, u_as = tree_walk_to_root(graph, parent, arc.tail)
    v_vs, v_as = tree_walk_to_root(graph, parent, arc.head)
    u_index = {x: i for i, x in enumerate(u_vs)}
    j = next(k for k, x in enumerate(v_vs) if x in u_index)
    i = u_index[v_vs[j]]
    vertices = [arc.tail] + v_vs[:j + 1] + list(reversed(u_vs[:i]))
    arcs = [arc.id] + v_as[:j] + list(reversed(u_as[:i]))
    return Walk(tuple(vertices), tuple(arcs))


def tree_normalize(graph, s, t):
    """
    Shifts `graph` so that the breadth-first tree from t carries identity labels

    Every vertex other than s and t is shifted by the label of its tree walk to t; s is left
    unshifted, so tree arcs at s carry the label of the tree walk from s to t. For a balanced graph
    every arc then carries the identity except the arcs at s, which carry the unique s-t label.

    Returns
    -------
    graph: LabeledGraph
        The (s, t)-equivalent graph
    residual: dict
        non-tree arc id -> its label when every vertex, s included, is shifted to make all tree arcs
        identity; the graph is balanced iff all of these are identity
    """
    check_terminals(graph, s, t)
    if not graph.is_connected():
        raise exceptions.ModelError("tree_normalize needs a connected graph")
    tree = bfs_tree(graph, t)
    pot = tree_potentials(graph, t, tree)
    tree_arcs = {aid for aid in tree[0].values() if aid is not None}
    full = apply_shifts(graph, pot)
    residual = {arc.id: full.arc(arc.id).label for arc in graph.arcs if arc.id not in tree_arcs}
    shifts = dict(pot)
    shifts[s] = graph.group.identity()
    return apply_shifts(graph, shifts), residual


def is_balanced(graph):
    """
    Tests whether every cycle of `graph` has identity label

    Returns
    -------
    (bool, Walk or None)
        The witness is the fundamental cycle of the lowest-id arc, over all components, with a
        non-identity residual.
    """
    worst = None  # (arc id, component graph, parent map)
    for comp in components(graph):
        sub = graph.subgraph(comp)
        tree = bfs_tree(sub, comp[0])
        pot = tree_potentials(sub, comp[0], tree)
        tree_arcs = {aid for aid in tree[0].values() if aid is not None}
        for arc in sub.arcs:
            if arc.id in tree_arcs:
                continue
            if not (pot[arc.head] * arc.label * ~pot[arc.tail]).is_identity:
                if worst is None or arc.id < worst[0]:
                    worst = (arc.id, sub, tree[0])
                break
    if worst is None:
        return True, None
    return False, fundamental_cycle(worst[1], worst[2], worst[0])


def any_st_path(graph, s, t):
    """A fewest-arcs s-t path, or None"""
    try:
        vertices = nx.shortest_path(graph.to_networkx(), s, t)
    except nx.NetworkXNoPath:
        return None
    return path_from_vertices(graph, vertices)


def two_paths_from_cycle(graph, s, t, cycle):
    """
    Two s-t paths with distinct labels routed through an unbalanced cycle

    s and t are joined by disjoint paths to cycle vertices x and y, and the cycle is traversed
    from x to y in both directions.
    """
    if not cycle.is_closed:
        raise exceptions.PreconditionError("cycle must be a closed walk")
    n = cycle.length
    on_cycle = cycle.vertices[:-1]
    routes = vertex_disjoint_paths(graph, [s, t], on_cycle, 2)
    if isinstance(routes, Infeasible):
        raise exceptions.PreconditionError(f"no two disjoint paths from {{{s}, {t}}} to the cycle: {routes.reason}")
    from_s = next(r for r in routes if r.start == s)
    from_t = next(r for r in routes if r.start == t)
    i = on_cycle.index(from_s.end)
    vertices = [cycle.vertices[(i + k) % n] for k in range(n + 1)]
    arcs = [cycle.arcs[(i + k) % n] for k in range(n)]
    j = vertices.index(from_t.end)
    one_way = Walk(tuple(vertices[:j + 1]), tuple(arcs[:j]))
    other_way = Walk(tuple(reversed(vertices[j:])), tuple(reversed(arcs[j:])))
    tail = from_t.reversed()
    p = (from_s + one_way + tail).to_path()
    q = (from_s + other_way + tail).to_path()
    return p, q


def nonzero_path(graph, s, t, alpha):
    """
    An s-t path whose label is not `alpha`, or Contained when every s-t path has label alpha

    Parameters
    ----------
    graph: LabeledGraph
    s, t: vertices
    alpha: GroupElement
        The forbidden label

    Returns
    -------
    Path or Contained
    """
    check_terminals(graph, s, t)
    graph.group.check(alpha)
    g = normalize_to_D(graph, s, t)
    if not g.arcs:
        return Contained([alpha])
    balanced, cycle = is_balanced(g)
    if balanced:
        path = any_st_path(g, s, t)
        if walk_label(g, path) != alpha:
            return path
        return Contained([alpha])
    p, q = two_paths_from_cycle(g, s, t, cycle)
    logger.debug("unbalanced; two labels %s and %s", walk_label(g, p), walk_label(g, q))
    if walk_label(g, p) != alpha:
        return p
    return q


def commuting_two_label_test(graph, s, t, alpha, beta):
    """
    Decides whether the s-t labels are exactly {alpha, beta} when alpha*beta^-1 = beta*alpha^-1

    After shifting every non-terminal vertex by its tree potential, the answer is yes iff the graph
    is unbalanced, each arc at s carries alpha or beta (read leaving s), and every other arc carries
    the identity or alpha*beta^-1.
    """
    if alpha == beta:
        raise exceptions.PreconditionError("alpha and beta must differ")
    gap = alpha * ~beta
    if gap != beta * ~alpha:
        raise exceptions.PreconditionError(f"{alpha}*{beta}^-1 differs from {beta}*{alpha}^-1")
    if not graph.is_connected() or is_balanced(graph)[0]:
        return False
    pot = tree_potentials(graph, t)
    g = apply_shifts(graph, {v: x for v, x in pot.items() if v != s and v != t})
    for arc in g.arcs:
        if s in arc.ends:
            if arc_traverse_label(g, arc.id, arc.other(s)) not in (alpha, beta):
                return False
        elif not (arc.label.is_identity or arc.label == gap):
            return False
    return True
