"""
Group-labeled multigraphs, walks and walk labels.

A labeled graph is a loopless directed multigraph whose arcs carry group elements. Traversing an arc
against its direction contributes the inverse label, and the label of a walk is the right-to-left
product of its step labels: for steps e_1 ... e_k the label is psi(e_k) ... psi(e_1).
"""
from dataclasses import dataclass
from collections import OrderedDict

import networkx as nx

from glpaths import exceptions
from glpaths.base_model import GlpObject


def vertex_key(v):
    return str(v)


@dataclass(frozen=True)
class Arc(object):
    id: int
    tail: object
    head: object
    label: object
    virtual: bool = False

    @property
    def ends(self):
        return self.tail, self.head

    def other(self, v):
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise exceptions.ModelError(f"vertex '{v}' is not an endpoint of arc {self.id}")

    def reversed(self):
        return Arc(self.id, self.head, self.tail, ~self.label, self.virtual)


@dataclass(frozen=True)
class Walk(object):
    """
    A walk stored as its vertex sequence and the ids of the arcs between consecutive vertices.

    Step i runs from vertices[i] to vertices[i + 1] along arc arcs[i]; it is a forward traversal
    iff that arc's tail is vertices[i].
    """
    vertices: tuple
    arcs: tuple = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.arcs) + 1:
            raise exceptions.ModelError(f"walk with {len(self.arcs)} arcs needs {len(self.arcs) + 1} vertices, "
                                        f"got {len(self.vertices)}")

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def length(self):
        return len(self.arcs)

    @property
    def is_closed(self):
        return self.length > 0 and self.start == self.end

    def __add__(self, other):
        if self.end != other.start:
            raise exceptions.ModelError(f"cannot join walk ending at '{self.end}' to walk starting at '{other.start}'")
        return Walk(self.vertices + other.vertices[1:], self.arcs + other.arcs)

    def reversed(self):
        return Walk(tuple(reversed(self.vertices)), tuple(reversed(self.arcs)))

    def to_path(self):
        return Path(self.vertices, self.arcs)

    def to_dict(self, export_none=False):
        return OrderedDict([("vertices", [str(v) for v in self.vertices]), ("arcs", list(self.arcs))])

    def __str__(self):
        return ",".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class Path(Walk):
    """A walk that repeats no vertex"""

    def __post_init__(self):
        super(Path, self).__post_init__()
        if len(set(self.vertices)) != len(self.vertices):
            raise exceptions.ModelError(f"path repeats a vertex: {','.join(str(v) for v in self.vertices)}")

    def __add__(self, other):
        return Walk.__add__(self, other).to_path()

    def reversed(self):
        return Walk.reversed(self).to_path()


class LabeledGraph(GlpObject):
    """
    An immutable group-labeled multigraph

    Parameters
    ----------
    group: glpaths.group.GroupSpec
        The group all labels belong to
    vertices: list
        Vertex names, in order (duplicates are ignored)
    arcs: list of Arc
        Arcs with unique ids; endpoints must be listed in `vertices`
    next_arc_id: int, optional
        Lowest id that may be given to a newly added arc
    """
    op_type = "labeled_graph"

    def __init__(self, group, vertices=(), arcs=(), next_arc_id=None):
        self.group = group
        self._vertices = tuple(dict.fromkeys(vertices))
        vset = set(self._vertices)
        self._arcs = tuple(sorted(arcs, key=lambda a: a.id))
        self._by_id = {}
        self._incident = {v: [] for v in self._vertices}
        for arc in self._arcs:
            if arc.id in self._by_id:
                raise exceptions.ModelError(f"duplicate arc id {arc.id}")
            if arc.tail == arc.head:
                raise exceptions.ModelError(f"arc {arc.id} is a loop at '{arc.tail}'")
            if arc.tail not in vset or arc.head not in vset:
                raise exceptions.ModelError(f"arc {arc.id} has an endpoint outside the vertex set")
            group.check(arc.label)
            self._by_id[arc.id] = arc
            self._incident[arc.tail].append(arc)
            self._incident[arc.head].append(arc)
        max_id = max(self._by_id) + 1 if self._by_id else 0
        self._next_arc_id = max_id if next_arc_id is None else max(max_id, next_arc_id)

    @property
    def vertices(self):
        return self._vertices

    @property
    def arcs(self):
        return self._arcs

    @property
    def n_vertices(self):
        return len(self._vertices)

    @property
    def n_arcs(self):
        return len(self._arcs)

    @property
    def next_arc_id(self):
        return self._next_arc_id

    def has_vertex(self, v):
        return v in self._incident

    def has_arc(self, arc_id):
        return arc_id in self._by_id

    def arc(self, arc_id):
        try:
            return self._by_id[arc_id]
        except KeyError:
            raise exceptions.ModelError(f"no arc with id {arc_id}")

    def incident(self, v):
        """Arcs incident to `v` ordered by the other endpoint, then by arc id"""
        self.check_vertex(v)
        return sorted(self._incident[v], key=lambda a: (vertex_key(a.other(v)), a.id))

    def neighbors(self, v):
        self.check_vertex(v)
        return sorted({a.other(v) for a in self._incident[v]}, key=vertex_key)

    def arcs_between(self, u, v):
        self.check_vertex(u)
        return [a for a in self._incident[u] if a.other(u) == v]

    def check_vertex(self, v):
        if v not in self._incident:
            raise exceptions.ModelError(f"vertex '{v}' is not in the graph")

    def sorted_vertices(self):
        return sorted(self._vertices, key=vertex_key)

    def _new(self, vertices, arcs):
        return LabeledGraph(self.group, vertices, arcs, next_arc_id=self._next_arc_id)

    def subgraph(self, vertices):
        """Induced subgraph; keeps the vertex order of this graph"""
        keep = set(vertices)
        return self._new([v for v in self._vertices if v in keep],
                         [a for a in self._arcs if a.tail in keep and a.head in keep])

    def remove_vertices(self, vertices):
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def remove_arcs(self, arc_ids):
        drop = set(arc_ids)
        return self._new(self._vertices, [a for a in self._arcs if a.id not in drop])

    def replace_arcs(self, arcs):
        """Swaps in arcs with the same ids (e.g. relabeled or reoriented versions)"""
        new = {a.id: a for a in arcs}
        return self._new(self._vertices, [new.get(a.id, a) for a in self._arcs])

    def add_arc(self, tail, head, label, virtual=False):
        aid = self._next_arc_id
        g = LabeledGraph(self.group, self._vertices, self._arcs + (Arc(aid, tail, head, label, virtual),),
                         next_arc_id=aid + 1)
        return g, aid

    def to_networkx(self):
        """
        Underlying simple undirected graph

        Parallel arcs collapse to one edge whose `id` attribute is the lowest of their ids. Edges are
        inserted in id order, so each adjacency lists neighbours by that id.
        """
        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        for a in self._arcs:
            if not h.has_edge(*a.ends):
                h.add_edge(*a.ends, id=a.id)
        return h

    def to_multigraph(self):
        """Undirected networkx multigraph with one edge per arc, keyed by arc id"""
        h = nx.MultiGraph()
        h.add_nodes_from(self._vertices)
        for a in self._arcs:
            h.add_edge(a.tail, a.head, key=a.id)
        return h

    def is_connected(self):
        if not self._vertices:
            return True
        return nx.is_connected(self.to_networkx())

    def __eq__(self, other):
        return (isinstance(other, LabeledGraph) and self.group == other.group and
                self._vertices == other._vertices and self._arcs == other._arcs)

    def __repr__(self):
        return f"LabeledGraph({self.group}, {self.n_vertices} vertices, {self.n_arcs} arcs)"

    def to_dict(self, export_none=False):
        outputs = OrderedDict()
        outputs["type"] = self.op_type
        outputs["group"] = self.group.to_dict()
        outputs["vertices"] = [str(v) for v in self._vertices]
        outputs["arcs"] = [OrderedDict([("id", a.id), ("tail", str(a.tail)), ("head", str(a.head)),
                                        ("label", a.label.to_text()), ("virtual", a.virtual)]) for a in self._arcs]
        return outputs


def arc_traverse_label(graph, arc_id, entered):
    """Label contributed by traversing the arc into vertex `entered`"""
    arc = graph.arc(arc_id)
    if entered == arc.head:
        return arc.label
    if entered == arc.tail:
        return ~arc.label
    raise exceptions.ModelError(f"vertex '{entered}' is not an endpoint of arc {arc_id}")


def is_valid_walk(graph, walk):
    for i, aid in enumerate(walk.arcs):
        if not graph.has_arc(aid):
            return False
        ends = graph.arc(aid).ends
        if {walk.vertices[i], walk.vertices[i + 1]} != set(ends):
            return False
    return all(graph.has_vertex(v) for v in walk.vertices)


def walk_label(graph, walk):
    if not is_valid_walk(graph, walk):
        raise exceptions.ModelError(f"walk {walk} is not valid in the graph")
    label = graph.group.identity()
    for i, aid in enumerate(walk.arcs):
        label = arc_traverse_label(graph, aid, walk.vertices[i + 1]) * label
    return label


def validate_path(graph, path, s, t):
    """True if `path` is a simple s-t path of `graph`"""
    if path.start != s or path.end != t:
        return False
    if len(set(path.vertices)) != len(path.vertices):
        return False
    return is_valid_walk(graph, path)


def walk_from_vertices(graph, vertices, arcs=None):
    """
    Builds a walk through `vertices`, taking the lowest-id arc between consecutive vertices
    unless `arcs` are given.
    """
    vertices = tuple(vertices)
    if arcs is None:
        arcs = []
        for u, v in zip(vertices[:-1], vertices[1:]):
            between = graph.arcs_between(u, v)
            if not between:
                raise exceptions.ModelError(f"no arc between '{u}' and '{v}'")
            arcs.append(min(a.id for a in between))
    return Walk(vertices, tuple(arcs))


def path_from_vertices(graph, vertices, arcs=None):
    return walk_from_vertices(graph, vertices, arcs).to_path()


def iter_st_paths(graph, s, t):
    """Yields every simple s-t path, one for each choice among parallel arcs"""
    graph.check_vertex(s)
    graph.check_vertex(t)
    if s == t:
        raise exceptions.ModelError("terminals must be distinct")
    # multigraph edges come back as (from, to, arc id)
    for edges in nx.all_simple_edge_paths(graph.to_multigraph(), s, t):
        yield Path((s,) + tuple(e[1] for e in edges), tuple(e[2] for e in edges))


def _equivalence_key(arc):
    u, v = sorted(arc.ends, key=vertex_key)
    label = arc.label if arc.head == v else ~arc.label
    return u, v, label


def dedupe_equivalent_arcs(graph):
    """
    Removes equivalent arcs (parallel with equal labels, or anti-parallel with inverse labels),
    keeping the lowest id of each class.
    """
    seen = set()
    keep = []
    for arc in graph.arcs:
        key = _equivalence_key(arc)
        if key in seen:
            continue
        seen.add(key)
        keep.append(arc)
    return graph._new(graph.vertices, keep)


def find_equivalent_arc(graph, tail, head, label):
    """Id of an arc equivalent to tail->head labeled `label`, or None"""
    for arc in graph.arcs_between(tail, head):
        if arc.head == head and arc.label == label:
            return arc.id
        if arc.tail == head and arc.label == ~label:
            return arc.id
    return None


def check_terminals(graph, s, t):
    graph.check_vertex(s)
    graph.check_vertex(t)
    if s == t:
        raise exceptions.ModelError(f"terminals must be distinct, both are '{s}'")


def normalize_to_D(graph, s, t):
    """
    Largest subgraph in which every vertex lies on an s-t path and no arcs are equivalent.

    This is the block of G + st containing the virtual edge st; s-t path labels are unchanged.
    Returns the graph on {s, t} with no arcs when s and t are disconnected.
    """
    check_terminals(graph, s, t)
    g = dedupe_equivalent_arcs(graph)
    h = g.to_networkx()
    h.add_edge(s, t)
    for block in nx.biconnected_components(h):
        if s in block and t in block:
            return g.subgraph(block)
    raise exceptions.ModelError("virtual edge missing from block decomposition")


def orient_around_terminals(graph, s, t):
    """Reorients arcs so those at s leave s and those at t enter t (s wins for s-t arcs)"""
    check_terminals(graph, s, t)
    flipped = []
    for arc in graph.arcs:
        if arc.head == s or (arc.tail == t and arc.head != s):
            flipped.append(arc.reversed())
    return graph.replace_arcs(flipped)


def has_triple_parallel(graph):
    """True if some vertex pair is joined by three or more arcs"""
    counts = {}
    for arc in graph.arcs:
        key = frozenset(arc.ends)
        counts[key] = counts.get(key, 0) + 1
        if counts[key] >= 3:
            return True
    return False
