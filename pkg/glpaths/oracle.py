"""
Exhaustive reference implementations for small graphs.

Nothing here calls the traversal or labelling helpers of the algorithm modules; paths and cycles
are found by a separate depth-first search and labels are accumulated with the group directly.
"""
from glpaths import exceptions
from glpaths.lgraph import Path, Walk
from glpaths.results import Infeasible


def _adjacency(graph):
    adj = {v: [] for v in graph.vertices}
    for arc in graph.arcs:
        adj[arc.tail].append((str(arc.head), arc.id, arc.head))
        adj[arc.head].append((str(arc.tail), arc.id, arc.tail))
    return {v: [(aid, w) for _, aid, w in sorted(steps, key=lambda x: (x[0], x[1]))] for v, steps in adj.items()}


def _step_label(group, arc, entered):
    if arc.head == entered:
        return arc.label
    return group.inv(arc.label)


def _accumulate(graph, vertices, arc_ids):
    group = graph.group
    by_id = {arc.id: arc for arc in graph.arcs}
    out = group.identity()
    for i, aid in enumerate(arc_ids):
        out = group.mul(_step_label(group, by_id[aid], vertices[i + 1]), out)
    return out


def _dfs_paths(adj, s, t, blocked=()):
    # iterative, with a neighbour cursor per path vertex
    on_path = set(blocked) | {s}
    vertices = [s]
    arcs = []
    cursors = [0]
    while cursors:
        v = vertices[-1]
        i = cursors[-1]
        if i >= len(adj[v]):
            cursors.pop()
            on_path.discard(vertices.pop())
            if arcs:
                arcs.pop()
            continue
        cursors[-1] += 1
        aid, w = adj[v][i]
        if w in on_path:
            continue
        if w == t:
            yield tuple(vertices) + (w,), tuple(arcs) + (aid,)
            continue
        vertices.append(w)
        arcs.append(aid)
        cursors.append(0)
        on_path.add(w)


def enumerate_st_paths(graph, s, t, visitor=None):
    """
    Every simple s-t path exactly once, each parallel arc choice separately

    Parameters
    ----------
    graph: LabeledGraph
    s, t: vertices
    visitor: callable, optional
        Called with each Path; the enumeration stops early when it returns True

    Returns
    -------
    list of Path, or the number of paths visited when a visitor is given
    """
    if s == t:
        raise exceptions.ModelError("terminals must be distinct")
    adj = _adjacency(graph)
    if s not in adj or t not in adj:
        raise exceptions.ModelError(f"terminal missing from graph: '{s}' or '{t}'")
    if visitor is None:
        return [Path(vs, aids) for vs, aids in _dfs_paths(adj, s, t)]
    count = 0
    for vs, aids in _dfs_paths(adj, s, t):
        count += 1
        if visitor(Path(vs, aids)):
            break
    return count


def label_set_bruteforce(graph, s, t, cap=3):
    """
    The set of s-t path labels, exact while it has at most `cap` elements

    Once more than `cap` labels are seen the search stops and the returned set has cap + 1 elements.
    """
    if cap < 1:
        raise ValueError(f"cap must be at least 1, not {cap}")
    labels = set()

    def visit(path):
        labels.add(_accumulate(graph, path.vertices, path.arcs))
        return len(labels) > cap

    enumerate_st_paths(graph, s, t, visitor=visit)
    return frozenset(labels)


def iter_simple_cycles(graph):
    """
    Every simple cycle once, as a closed Walk starting at its smallest vertex

    Digons formed by two parallel arcs are cycles; of the two directions the one whose arc id
    sequence is smaller is kept.
    """
    adj = _adjacency(graph)
    order = sorted(graph.vertices, key=str)
    seen = set()
    for k, root in enumerate(order):
        allowed = set(order[k:])
        sub = {v: [(aid, w) for aid, w in adj[v] if w in allowed] for v in allowed}
        for first_aid, first in sub[root]:
            for vs, aids in _dfs_paths(sub, first, root, blocked=()):
                if len(aids) == 0 or (len(vs) == 2 and aids[0] == first_aid):
                    continue
                arcs = (first_aid,) + aids
                key = frozenset(arcs)
                if key in seen:
                    continue
                seen.add(key)
                vertices = (root,) + vs
                back_arcs = tuple(reversed(arcs))
                if back_arcs < arcs:
                    yield Walk(tuple(reversed(vertices)), back_arcs)
                else:
                    yield Walk(vertices, arcs)


def all_cycles_balanced(graph):
    group = graph.group
    for cycle in iter_simple_cycles(graph):
        if not group.is_identity(_accumulate(graph, cycle.vertices, cycle.arcs)):
            return False
    return True


def self_inverse_unbalanced_cycle_exists(graph):
    """True if some simple cycle has a label gamma != identity with gamma * gamma = identity"""
    group = graph.group
    for cycle in iter_simple_cycles(graph):
        gamma = _accumulate(graph, cycle.vertices, cycle.arcs)
        if not group.is_identity(gamma) and group.is_identity(group.mul(gamma, gamma)):
            return True
    return False


def disjoint_paths_bruteforce(graph, terminal_pairs):
    """
    Pairwise vertex-disjoint paths joining each terminal pair, by exhaustive search

    Returns
    -------
    list of Path or Infeasible
    """
    terminal_pairs = [tuple(pair) for pair in terminal_pairs]
    terminals = [v for pair in terminal_pairs for v in pair]
    if len(set(terminals)) != len(terminals):
        return Infeasible("terminals are not distinct")
    adj = _adjacency(graph)
    for v in terminals:
        if v not in adj:
            raise exceptions.ModelError(f"terminal '{v}' is not a vertex")

    def search(i, used):
        if i == len(terminal_pairs):
            return []
        s, t = terminal_pairs[i]
        others = set(terminals) - {s, t}
        for vs, aids in _dfs_paths(adj, s, t, blocked=used | others):
            rest = search(i + 1, used | set(vs))
            if rest is not None:
                return [Path(vs, aids)] + rest
        return None

    found = search(0, set())
    if found is None:
        return Infeasible("exhaustive search found no disjoint paths")
    return found
