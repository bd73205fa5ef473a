"""
Planar embeddings as rotation systems over arc ids, face labels, and the D0 membership test used
when the contracted graph is too large to enumerate.
"""
import logging

import networkx as nx

from glpaths import cc
from glpaths import exceptions
from glpaths.base_model import GlpObject
from glpaths.lgraph import Walk, arc_traverse_label, walk_label
from glpaths.normalize import any_st_path, is_balanced, tree_potentials
from glpaths.results import NonPlanar

logger = logging.getLogger(__name__)


def trace_faces(rotation, ends):
    """
    Face boundary walks of a rotation system

    Leaving w, the walk continues along the arc preceding the arriving arc in the clockwise order at w.

    Returns
    -------
    faces: list of Walk
    dart_face: dict
        (arc id, vertex the arc is left from) -> face index
    """
    position = {v: {aid: i for i, aid in enumerate(order)} for v, order in rotation.items()}
    dart_face = {}
    faces = []
    for v, order in rotation.items():
        for aid in order:
            if (aid, v) in dart_face:
                continue
            vertices = [v]
            arcs = []
            cur_v, cur_a = v, aid
            while (cur_a, cur_v) not in dart_face:
                dart_face[(cur_a, cur_v)] = len(faces)
                tail, head = ends[cur_a]
                w = head if cur_v == tail else tail
                arcs.append(cur_a)
                vertices.append(w)
                order_w = rotation[w]
                cur_a = order_w[(position[w][cur_a] - 1) % len(order_w)]
                cur_v = w
            faces.append(Walk(tuple(vertices), tuple(arcs)))
    return faces, dart_face


class Embedding(GlpObject):
    """
    A combinatorial planar embedding

    Parameters
    ----------
    rotation: dict
        vertex -> tuple of incident arc ids in clockwise order
    ends: dict
        arc id -> (tail, head)
    outer: int
        Index of the outer face
    """
    op_type = "embedding"

    def __init__(self, rotation, ends, outer=0):
        self.rotation = {v: tuple(order) for v, order in rotation.items()}
        self._ends = dict(ends)
        if self._ends:
            self.faces, self._dart_face = trace_faces(self.rotation, self._ends)
        else:
            self.faces = [Walk(tuple(self.rotation)[:1])]
            self._dart_face = {}
        self.outer = outer

    @property
    def n_faces(self):
        return len(self.faces)

    def faces_with_arc(self, arc_id):
        """The two faces beside the arc: first on the side left from its tail, then from its head"""
        tail, head = self._ends[arc_id]
        return [self._dart_face[(arc_id, tail)], self._dart_face[(arc_id, head)]]

    def check(self):
        """Euler's formula and rotation/face consistency"""
        n_v = len(self.rotation)
        n_e = len(self._ends)
        if n_v - n_e + self.n_faces != 2:
            return False
        for aid, (tail, head) in self._ends.items():
            if self.rotation[tail].count(aid) != 1 or self.rotation[head].count(aid) != 1:
                return False
        if sum(len(order) for order in self.rotation.values()) != 2 * n_e:
            return False
        sides = [(aid, face.vertices[i]) for face in self.faces for i, aid in enumerate(face.arcs)]
        return len(sides) == 2 * n_e and len(set(sides)) == 2 * n_e


def planar_embed(graph, required_outer_arc=None, variant=0):
    """
    Planar embedding of a connected labeled multigraph

    Parallel arcs beyond the first of each vertex pair are subdivided before the planarity test and
    read back as arcs in the rotation system.

    Parameters
    ----------
    graph: LabeledGraph
    required_outer_arc: int, optional
        The outer face is chosen among the two faces beside this arc
    variant: int
        0 or 1, which of those two faces is outer

    Returns
    -------
    Embedding or NonPlanar
    """
    if graph.n_vertices == 0 or not graph.is_connected():
        raise exceptions.ModelError("planar_embed needs a non-empty connected graph")
    ends = {arc.id: arc.ends for arc in graph.arcs}
    if not ends:
        return Embedding({graph.vertices[0]: ()}, ends)
    h = nx.Graph()
    h.add_nodes_from(graph.vertices)
    direct = {}
    subdivided = {}
    for arc in graph.arcs:
        key = frozenset(arc.ends)
        if key not in direct:
            direct[key] = arc.id
            h.add_edge(arc.tail, arc.head)
        else:
            mid = ("__subdivision__", arc.id)
            subdivided[mid] = arc.id
            h.add_edge(arc.tail, mid)
            h.add_edge(mid, arc.head)
    is_planar, nx_emb = nx.check_planarity(h)
    if not is_planar:
        logger.debug("graph with %d vertices is not planar", graph.n_vertices)
        return NonPlanar()
    rotation = {}
    for v in graph.vertices:
        order = []
        for nbr in nx_emb.neighbors_cw_order(v):
            if isinstance(nbr, tuple) and nbr in subdivided:
                order.append(subdivided[nbr])
            else:
                order.append(direct[frozenset((v, nbr))])
        rotation[v] = tuple(order)
    emb = Embedding(rotation, ends)
    if required_outer_arc is not None:
        emb.outer = emb.faces_with_arc(required_outer_arc)[variant]
    else:
        emb.outer = max(range(emb.n_faces), key=lambda i: (emb.faces[i].length, -i))
    return emb


def swap_parallel_pair(embedding, arc_a, arc_b):
    """The embedding with two parallel arcs exchanged in the rotation at both of their ends"""
    rotation = dict(embedding.rotation)
    for v in set(embedding._ends[arc_a]):
        order = list(rotation[v])
        i, j = order.index(arc_a), order.index(arc_b)
        order[i], order[j] = arc_b, arc_a
        rotation[v] = tuple(order)
    return Embedding(rotation, embedding._ends)


def face_label(graph, embedding, face):
    return walk_label(graph, embedding.faces[face])


def _terminal_side_labels(graph, drop, root, at_drop):
    """
    Labels of the arcs at `drop` once G - drop is shifted to all-identity (rooted at `root`),
    read on s-t paths; None when G - drop is not balanced.
    """
    rest = graph.remove_vertices([drop])
    if not rest.is_connected() or not is_balanced(rest)[0]:
        return None
    pot = tree_potentials(rest, root)
    labels = []
    for arc in graph.incident(drop):
        v = arc.other(drop)
        labels.append(at_drop(arc, v, pot[v]))
    return labels


def check_caseA(graph, s, t, alpha, beta):
    """
    True if G - s is balanced and every arc at s then reads alpha or beta, or symmetrically for t
    """
    if is_balanced(graph)[0]:
        return False
    allowed = (alpha, beta)
    from_s = _terminal_side_labels(graph, s, t, lambda arc, v, p: p * arc_traverse_label(graph, arc.id, v))
    if from_s is not None and all(x in allowed for x in from_s):
        return True
    into_t = _terminal_side_labels(graph, t, s, lambda arc, v, p: arc_traverse_label(graph, arc.id, t) * ~p)
    return into_t is not None and all(x in allowed for x in into_t)


def _outer_face_holds(graph, emb, outer, st_arc, s, t, alpha, beta):
    face = emb.faces[outer]
    n = face.length
    if len(set(face.vertices[:-1])) != n:
        return False
    k = face.arcs.index(st_arc)
    side = Walk(tuple(face.vertices[(k + 1 + i) % n] for i in range(n)),
                tuple(face.arcs[(k + 1 + i) % n] for i in range(n - 1)))
    if side.start != s:
        side = side.reversed()
    labels = {arc_traverse_label(graph, st_arc, t), walk_label(graph, side)}
    if labels != {alpha, beta}:
        return False
    n_unbalanced = sum(1 for i, f in enumerate(emb.faces) if i != outer and not walk_label(graph, f).is_identity)
    return n_unbalanced == 1


def check_caseC(graph, s, t, alpha, beta):
    """
    Planar case of the D0 test

    Returns
    -------
    str
        cc.IN_D0, cc.NOT_IN_D0 or cc.THREE_LABELS (a third s-t label was found on the way)
    """
    allowed = (alpha, beta)
    st_arcs = graph.arcs_between(s, t)
    st_labels = [arc_traverse_label(graph, a.id, t) for a in st_arcs]
    if any(x not in allowed for x in st_labels) or len(st_arcs) > 2:
        return cc.THREE_LABELS
    if not st_arcs:
        return cc.NOT_IN_D0
    g = graph
    if len(st_arcs) == 2:
        rest = g.remove_arcs([a.id for a in st_arcs])
        path = any_st_path(rest, s, t)
        if path is None:
            return cc.NOT_IN_D0
        gamma = walk_label(rest, path)
        if gamma not in allowed:
            return cc.THREE_LABELS
        g = g.remove_arcs([next(a.id for a, x in zip(st_arcs, st_labels) if x == gamma)])
    st_arc = g.arcs_between(s, t)[0].id
    by_pair = {}
    for arc in g.arcs:
        by_pair.setdefault(frozenset(arc.ends), []).append(arc.id)
    multi = [ids for ids in by_pair.values() if len(ids) > 1]
    if any(len(ids) > 2 for ids in multi):
        return cc.THREE_LABELS
    if len(multi) > 1:
        return cc.NOT_IN_D0
    emb = planar_embed(g)
    if isinstance(emb, NonPlanar):
        return cc.NOT_IN_D0
    embeddings = [emb]
    if multi:
        embeddings.append(swap_parallel_pair(emb, *multi[0]))
    for e in embeddings:
        for outer in sorted(set(e.faces_with_arc(st_arc))):
            if _outer_face_holds(g, e, outer, st_arc, s, t, alpha, beta):
                logger.debug("case C holds with outer face %s", e.faces[outer])
                return cc.IN_D0
    return cc.NOT_IN_D0


def check_D0(graph, s, t, alpha, beta):
    """
    Tests membership in the base class D0 for a contracted 3-connected graph with more than six vertices

    Returns
    -------
    str
        cc.IN_D0, cc.NOT_IN_D0 or cc.THREE_LABELS
    """
    if graph.n_vertices <= cc.ENUM_LIMIT or not graph.arcs_between(s, t):
        exceptions.precondition_warning(f"check_D0 needs more than {cc.ENUM_LIMIT} vertices and an s-t arc; "
                                        f"got {graph.n_vertices} vertices")
        return cc.NOT_IN_D0
    if check_caseA(graph, s, t, alpha, beta):
        return cc.IN_D0
    return check_caseC(graph, s, t, alpha, beta)
