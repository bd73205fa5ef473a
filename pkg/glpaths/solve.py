"""
Top-level label-set algorithms.

test_two_labels decides whether the s-t path labels number zero, one, two or at least three;
find_three_paths produces three distinct-label paths when there are at least three labels.
"""
import logging

from glpaths import cc
from glpaths import exceptions
from glpaths.connectivity import components, find_2cut
from glpaths.contraction import boundary_subgraph, find_3contractible, three_contract, two_contract
from glpaths.group import Cyclic
from glpaths.lgraph import (Path, check_terminals, has_triple_parallel, iter_st_paths, normalize_to_D,
                            orient_around_terminals, validate_path, walk_label)
from glpaths.normalize import any_st_path, commuting_two_label_test, is_balanced, two_paths_from_cycle
from glpaths.planar import check_D0
from glpaths.results import Contained, LabelSummary
from glpaths.solver_instance import SolverInstance

logger = logging.getLogger(__name__)


def test_two_labels(graph, s, t, find_three=True, si=None):
    """
    Classifies the set of s-t path labels as empty, one, two, or at least three labels

    Parameters
    ----------
    graph: LabeledGraph
    s, t: vertices
    find_three: bool
        If True, a THREE_OR_MORE answer carries three distinct-label witnesses from find_three_paths
    si: SolverInstance, optional

    Returns
    -------
    LabelSummary
    """
    if si is None:
        si = SolverInstance()
    check_terminals(graph, s, t)
    summary = _test_two_labels(graph, s, t, si, depth=0)
    if summary.classification == cc.THREE_OR_MORE and find_three:
        paths = find_three_paths(graph, s, t, si=si)
        summary = LabelSummary.from_paths(graph, cc.THREE_OR_MORE, paths)
    return summary


test_two_labels.__test__ = False  # not a pytest test
label_summary = test_two_labels


def _two(graph, p, q):
    return LabelSummary.from_paths(graph, cc.TWO, [p, q])


def _test_two_labels(graph, s, t, si, depth):
    si.n_recursions += 1
    # reduce to the s-t block
    g = normalize_to_D(graph, s, t)
    if not g.arcs:
        si.to_commands(f"{s}-{t}: no path", depth)
        return LabelSummary.empty()
    g = orient_around_terminals(g, s, t)
    if has_triple_parallel(g):
        si.to_commands(f"{s}-{t}: three parallel arcs", depth)
        return LabelSummary.three_or_more()
    # balanced graphs have a single label
    balanced, cycle = is_balanced(g)
    if balanced:
        path = any_st_path(g, s, t)
        si.to_commands(f"{s}-{t}: balanced", depth)
        return LabelSummary.from_paths(g, cc.ONE, [path])
    p, q = two_paths_from_cycle(g, s, t, cycle)
    alpha = walk_label(g, p)
    beta = walk_label(g, q)
    si.assert_invariant(validate_path(graph, p, s, t) and validate_path(graph, q, s, t),
                        "initial witnesses are not paths of the input graph")
    logger.debug("depth %d: witness labels %s and %s", depth, alpha, beta)
    g1 = g  # p and q live here; contractions may remove their arcs
    # labels with alpha * ~beta self-inverse
    if alpha * ~beta == beta * ~alpha:
        ok = commuting_two_label_test(g, s, t, alpha, beta)
        si.to_commands(f"{s}-{t}: commuting labels {alpha}, {beta}: {'two' if ok else 'three or more'}", depth)
        if ok:
            return _two(g1, p, q)
        return LabelSummary.three_or_more()
    if not g.arcs_between(s, t):
        g, _ = g.add_arc(s, t, alpha, virtual=True)
    # contract 2-cuts and 3-contractible sets until neither applies
    while True:
        cut = find_2cut(g) if g.n_vertices >= 4 else None
        if cut is not None:
            x, y = cut
            comp = next(c for c in components(g, cut) if s not in c and t not in c)
            inner = boundary_subgraph(g, comp)
            si.to_commands(f"{s}-{t}: 2-cut {{{x}, {y}}}, recursing into {len(comp)} vertices", depth)
            sub = _test_two_labels(inner, x, y, si, depth + 1)
            if sub.classification == cc.THREE_OR_MORE:
                return LabelSummary.three_or_more()
            if not sub.labels:
                raise exceptions.ModelError(f"no {x}-{y} path through a component of a 2-connected graph")
            contracted, record = two_contract(g, s, t, comp, list(zip(sub.labels, sub.witnesses)))
            si.n_two_contractions += 1
            si.assert_invariant(contracted.n_vertices + inner.n_vertices == g.n_vertices + 2,
                                "2-contraction vertex bookkeeping failed")
            si.assert_invariant(contracted.n_arcs + inner.n_arcs <= g.n_arcs + 2,
                                "2-contraction arc bookkeeping failed")
            g = contracted
        else:
            comp = find_3contractible(g, s, t)
            if comp is None:
                break
            si.to_commands(f"{s}-{t}: 3-contracting {len(comp)} vertices", depth)
            g, record = three_contract(g, s, t, comp)
            si.n_three_contractions += 1
        if has_triple_parallel(g):
            return LabelSummary.three_or_more()
    # small graphs are enumerated; larger ones are 3-connected and tested for D0
    if g.n_vertices <= si.enum_limit:
        si.n_enumerations += 1
        labels = set()
        for path in iter_st_paths(g, s, t):
            labels.add(walk_label(g, path))
            if len(labels) >= 3:
                si.to_commands(f"{s}-{t}: enumeration found three labels", depth)
                return LabelSummary.three_or_more()
        si.to_commands(f"{s}-{t}: enumeration found {len(labels)} labels", depth)
        return _two(g1, p, q)
    si.n_d0_checks += 1
    verdict = check_D0(g, s, t, alpha, beta)
    si.to_commands(f"{s}-{t}: D0 test on {g.n_vertices} vertices: {verdict}", depth)
    if verdict == cc.IN_D0:
        return _two(g1, p, q)
    return LabelSummary.three_or_more()


def _distinct_labels(graph, paths, count=3):
    chosen = []
    seen = set()
    for path in paths:
        label = walk_label(graph, path)
        if label not in seen:
            seen.add(label)
            chosen.append(path)
            if len(chosen) == count:
                break
    return chosen


def find_three_paths(graph, s, t, si=None):
    """
    Three s-t paths with pairwise distinct labels

    Raises PreconditionError when fewer than three labels exist.
    """
    if si is None:
        si = SolverInstance()
    check_terminals(graph, s, t)
    direct = [Path((s, t), (a.id,)) for a in sorted(graph.arcs_between(s, t), key=lambda a: a.id)]
    nbrs = [v for v in graph.neighbors(s) if v != t]
    if not nbrs:
        chosen = _distinct_labels(graph, direct)
    else:
        rest = graph.remove_vertices([s])
        tries = []
        for nbr in nbrs:
            result = _test_two_labels(rest, nbr, t, si, depth=1)
            if result.classification == cc.THREE_OR_MORE:
                first = min(a.id for a in graph.arcs_between(s, nbr))
                sub_paths = find_three_paths(rest, nbr, t, si=si)
                return [Path((s,) + p.vertices, (first,) + p.arcs) for p in sub_paths]
            tries.append((nbr, result))
        candidates = list(direct)
        for nbr, result in tries:
            for arc in sorted(graph.arcs_between(s, nbr), key=lambda a: a.id):
                for witness in result.witnesses:
                    candidates.append(Path((s,) + witness.vertices, (arc.id,) + witness.arcs))
        chosen = _distinct_labels(graph, candidates)
    if len(chosen) < 3:
        raise exceptions.PreconditionError(f"fewer than three distinct {s}-{t} path labels exist")
    return chosen


def forbidden_two_path(graph, s, t, alpha, beta, si=None):
    """
    An s-t path whose label is neither `alpha` nor `beta`, or Contained

    Returns
    -------
    Path or Contained
    """
    if alpha == beta:
        raise exceptions.PreconditionError("the two forbidden labels must differ")
    summary = test_two_labels(graph, s, t, find_three=True, si=si)
    for label, witness in zip(summary.labels, summary.witnesses):
        if label != alpha and label != beta:
            return witness
    return Contained([alpha, beta])


def z3_labels(graph, s, t, si=None):
    """The complete set of s-t path labels of a graph labeled by the cyclic group of order 3"""
    if graph.group != Cyclic(3):
        raise exceptions.GroupError(f"z3_labels needs group 'cyclic 3', not '{graph.group}'")
    return test_two_labels(graph, s, t, find_three=True, si=si)
