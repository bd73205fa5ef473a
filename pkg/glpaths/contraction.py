"""
2-contractions and 3-contractions, and expansion of paths back through them.

A contraction removes a vertex set X (avoiding the terminals) and replaces the boundary subgraph
G[[X]] = G[X + N(X)] - E(N(X)) by arcs between the boundary vertices carrying the labels of the
paths through X. Both kinds preserve the s-t label set.
"""
import itertools
import logging

from glpaths import cc
from glpaths import exceptions
from glpaths.base_model import GlpObject
from glpaths.connectivity import components, find_2cut, open_neighborhood, separates
from glpaths.lgraph import Walk, find_equivalent_arc, iter_st_paths, validate_path, vertex_key, walk_label
from glpaths.normalize import any_st_path, is_balanced

logger = logging.getLogger(__name__)


class AddedArc(GlpObject):
    op_type = "added_arc"

    def __init__(self, arc_id, tail, head, label, witness):
        self.arc_id = arc_id
        self.tail = tail
        self.head = head
        self.label = label
        self.witness = witness  # tail-head path inside the removed boundary subgraph


class ContractionRecord(GlpObject):
    """
    What a contraction removed and added

    Parameters
    ----------
    kind: str
        cc.TWO_CONTRACTION or cc.THREE_CONTRACTION
    removed: set
        The contracted vertex set X
    boundary: tuple
        N(X)
    added: list of AddedArc
    triangle: dict, optional
        For 3-contractions, arc id -> the boundary pair it joins, for all three triangle sides
        (added or already present)
    """
    op_type = "contraction_record"

    def __init__(self, kind, removed, boundary, added, triangle=None):
        self.kind = kind
        self.removed = sorted(removed, key=vertex_key)
        self.boundary = tuple(boundary)
        self.added = list(added)
        self.triangle = triangle

    def added_by_id(self):
        return {a.arc_id: a for a in self.added}

    def triangle_side(self, u, v):
        for aid, pair in self.triangle.items():
            if pair == frozenset((u, v)):
                return aid
        raise exceptions.PreconditionError(f"no triangle side between '{u}' and '{v}'")


def boundary_subgraph(graph, vertex_set):
    """G[[X]]: the subgraph induced by X and N(X), without arcs between vertices of N(X)"""
    vertex_set = set(vertex_set)
    if not vertex_set:
        return graph.subgraph([])
    nbrs = open_neighborhood(graph, vertex_set)
    sub = graph.subgraph(vertex_set | nbrs)
    return sub.remove_arcs([a.id for a in sub.arcs if a.tail in nbrs and a.head in nbrs])


def _check_removable(graph, s, t, vertex_set):
    if not vertex_set:
        raise exceptions.PreconditionError("cannot contract an empty vertex set")
    for v in vertex_set:
        graph.check_vertex(v)
    if s in vertex_set or t in vertex_set:
        raise exceptions.PreconditionError("a contracted set must avoid both terminals")


def two_contract(graph, s, t, vertex_set, labelled_witnesses):
    """
    2-contraction of `vertex_set`

    Parameters
    ----------
    graph: LabeledGraph
    s, t: vertices
    vertex_set: iterable
        X, with N(X) = {x, y}
    labelled_witnesses: list of (GroupElement, Path)
        Every label of x-y paths in G[[X]] with a witness; all witnesses run from the same x to the same y

    Returns
    -------
    (LabeledGraph, ContractionRecord)
    """
    vertex_set = set(vertex_set)
    _check_removable(graph, s, t, vertex_set)
    nbrs = open_neighborhood(graph, vertex_set)
    if len(nbrs) != 2:
        raise exceptions.PreconditionError(f"2-contraction needs exactly two boundary vertices, got {len(nbrs)}")
    inner = boundary_subgraph(graph, vertex_set)
    if not inner.is_connected():
        raise exceptions.PreconditionError("boundary subgraph is not connected")
    if inner == graph:
        raise exceptions.PreconditionError("boundary subgraph is the whole graph")
    if not labelled_witnesses:
        raise exceptions.PreconditionError("2-contraction needs at least one label")
    x = labelled_witnesses[0][1].start
    y = labelled_witnesses[0][1].end
    if {x, y} != nbrs:
        raise exceptions.PreconditionError(f"witnesses must join the boundary vertices {sorted(nbrs, key=vertex_key)}")
    for label, witness in labelled_witnesses:
        if not validate_path(inner, witness, x, y) or walk_label(inner, witness) != label:
            raise exceptions.PreconditionError(f"witness {witness} does not realize label {label}")
    g = graph.remove_vertices(vertex_set)
    added = []
    for label, witness in labelled_witnesses:
        if find_equivalent_arc(g, x, y, label) is not None:
            continue
        g, aid = g.add_arc(x, y, label)
        added.append(AddedArc(aid, x, y, label, witness))
    logger.debug("2-contracted %s onto %s-%s adding %d arcs", sorted(vertex_set, key=vertex_key), x, y, len(added))
    return g, ContractionRecord(cc.TWO_CONTRACTION, vertex_set, (x, y), added)


def two_contract_exhaustive(graph, s, t, vertex_set):
    """2-contraction with the x-y labels of G[[X]] found by enumerating its paths"""
    nbrs = sorted(open_neighborhood(graph, vertex_set), key=vertex_key)
    if len(nbrs) != 2:
        raise exceptions.PreconditionError(f"2-contraction needs exactly two boundary vertices, got {len(nbrs)}")
    inner = boundary_subgraph(graph, vertex_set)
    found = {}
    for path in iter_st_paths(inner, nbrs[0], nbrs[1]):
        found.setdefault(walk_label(inner, path), path)
    return two_contract(graph, s, t, vertex_set, list(found.items()))


def find_2contractible(graph, s, t):
    """First 2-contractible set among components of G - {x, y} for separating pairs, else None"""
    h = graph.to_networkx()
    for pair in itertools.combinations(graph.sorted_vertices(), 2):
        if not separates(graph, pair, h):
            continue
        for comp in components(graph, pair):
            if s in comp or t in comp or open_neighborhood(graph, comp) != set(pair):
                continue
            inner = boundary_subgraph(graph, comp)
            if inner.is_connected() and inner != graph:
                return set(comp)
    return None


def three_contract(graph, s, t, vertex_set):
    """
    3-contraction of `vertex_set`: X is replaced by a balanced triangle on N(X)

    Returns
    -------
    (LabeledGraph, ContractionRecord)
    """
    vertex_set = set(vertex_set)
    _check_removable(graph, s, t, vertex_set)
    nbrs = sorted(open_neighborhood(graph, vertex_set), key=vertex_key)
    if len(nbrs) != 3:
        raise exceptions.PreconditionError(f"3-contraction needs exactly three boundary vertices, got {len(nbrs)}")
    if not graph.subgraph(vertex_set).is_connected():
        raise exceptions.PreconditionError("contracted set does not induce a connected subgraph")
    inner = boundary_subgraph(graph, vertex_set)
    if not is_balanced(inner)[0]:
        raise exceptions.PreconditionError("boundary subgraph is not balanced")
    g = graph.remove_vertices(vertex_set)
    added = []
    triangle = {}
    for x, y in itertools.combinations(nbrs, 2):
        z = next(v for v in nbrs if v not in (x, y))
        witness = any_st_path(inner.remove_vertices([z]), x, y)
        if witness is None:
            raise exceptions.PreconditionError(f"no path from '{x}' to '{y}' through the contracted set")
        label = walk_label(inner, witness)
        aid = find_equivalent_arc(g, x, y, label)
        if aid is None:
            g, aid = g.add_arc(x, y, label)
            added.append(AddedArc(aid, x, y, label, witness))
        triangle[aid] = frozenset((x, y))
    logger.debug("3-contracted %s onto %s", sorted(vertex_set, key=vertex_key), nbrs)
    return g, ContractionRecord(cc.THREE_CONTRACTION, vertex_set, tuple(nbrs), added, triangle)


def find_3contractible(graph, s, t):
    """
    First 3-contractible vertex set, or None

    Candidates are the components of G - T for every vertex triple T in ascending order (components
    by smallest vertex); a candidate qualifies when it avoids the terminals, its neighbourhood is all
    of T and its boundary subgraph is balanced.
    """
    for triple in itertools.combinations(graph.sorted_vertices(), 3):
        for comp in components(graph, triple):
            if s in comp or t in comp:
                continue
            if open_neighborhood(graph, comp) != set(triple):
                continue
            if is_balanced(boundary_subgraph(graph, comp))[0]:
                return set(comp)
    return None


def _orient(witness, u, v):
    if witness.start == u and witness.end == v:
        return witness
    if witness.start == v and witness.end == u:
        return witness.reversed()
    raise exceptions.PreconditionError(f"witness {witness} does not join '{u}' and '{v}'")


def expand_path(records, path):
    """
    Rewrites a path of a contracted graph into the graph before the contractions

    `records` are in the order the contractions were applied. The label is unchanged.
    """
    vertices = list(path.vertices)
    arcs = list(path.arcs)
    for record in reversed(records):
        if record.kind == cc.THREE_CONTRACTION:
            i = 0
            while i < len(arcs) - 1:
                if arcs[i] in record.triangle and arcs[i + 1] in record.triangle:
                    if vertices[i] == vertices[i + 2]:
                        raise exceptions.PreconditionError("path walks a triangle side back and forth")
                    arcs[i:i + 2] = [record.triangle_side(vertices[i], vertices[i + 2])]
                    del vertices[i + 1]
                else:
                    i += 1
        by_id = record.added_by_id()
        new_vertices = [vertices[0]]
        new_arcs = []
        for i, aid in enumerate(arcs):
            if aid in by_id:
                witness = _orient(by_id[aid].witness, vertices[i], vertices[i + 1])
                new_vertices.extend(witness.vertices[1:])
                new_arcs.extend(witness.arcs)
            else:
                new_vertices.append(vertices[i + 1])
                new_arcs.append(aid)
        vertices, arcs = new_vertices, new_arcs
    if len(set(vertices)) != len(vertices):
        raise exceptions.PreconditionError("expanded path repeats a vertex; contraction records are inconsistent")
    return Walk(tuple(vertices), tuple(arcs)).to_path()
