"""
Command line interface and the instance file reader.

Instance files are UTF-8 and line oriented::

    # comment
    group cyclic 3
    vertex s
    arc s u 1
    edge u t

`edge` lines carry the identity label; a file with only `edge` lines and no `group` line is an
unlabeled graph (trivial group).
"""
import argparse
import json
import logging
import re
import sys

import numpy as np

from glpaths import cc
from glpaths import exceptions
from glpaths.extensions import to_dot, to_instance_text
from glpaths.group import Cyclic, parse_group
from glpaths.lgraph import Arc, LabeledGraph, walk_label
from glpaths.normalize import is_balanced
from glpaths.oracle import disjoint_paths_bruteforce, label_set_bruteforce
from glpaths.reduce import reduce_kdisjoint, solve_2disjoint
from glpaths.results import Contained, Infeasible, LabelSummary
from glpaths.solve import find_three_paths, forbidden_two_path, test_two_labels, z3_labels
from glpaths.solver_instance import SolverInstance
from glpaths.tools.random_instances import random_graph

logger = logging.getLogger(__name__)

VERTEX_NAME = re.compile(r"[A-Za-z0-9_]+")


def _tokens(line):
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_instance(text):
    """
    Reads an instance file

    Returns
    -------
    graph: LabeledGraph
    diagnostics: list of str
        Non-fatal remarks (duplicate vertex lines, parallel arcs)

    Raises
    ------
    InstanceParseError
    """
    group = None
    vertices = []
    arcs = []  # (tail, head, label), label None for edge lines
    diagnostics = []
    has_arc_line = False
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        keyword, col = toks[0]
        if keyword == "group":
            if group is not None:
                raise exceptions.InstanceParseError(n, col, "group declared twice")
            if len(toks) < 2:
                raise exceptions.InstanceParseError(n, col, "group line needs a kind")
            try:
                group = parse_group(toks[1][0], [tok for tok, _ in toks[2:]])
            except exceptions.GroupError as e:
                raise exceptions.InstanceParseError(n, toks[1][1], str(e))
        elif keyword == "vertex":
            if len(toks) != 2:
                raise exceptions.InstanceParseError(n, col, "vertex line needs exactly one name")
            name, ncol = toks[1]
            if not VERTEX_NAME.fullmatch(name):
                raise exceptions.InstanceParseError(n, ncol, f"invalid vertex name '{name}'")
            if name in vertices:
                diagnostics.append(f"line {n}: vertex '{name}' listed twice")
            vertices.append(name)
        elif keyword in ("arc", "edge"):
            need = 4 if keyword == "arc" else 3
            if len(toks) < need or (keyword == "edge" and len(toks) != 3):
                raise exceptions.InstanceParseError(n, col, f"malformed {keyword} line")
            (tail, tcol), (head, hcol) = toks[1], toks[2]
            for name, ncol in ((tail, tcol), (head, hcol)):
                if not VERTEX_NAME.fullmatch(name):
                    raise exceptions.InstanceParseError(n, ncol, f"invalid vertex name '{name}'")
            if tail == head:
                raise exceptions.InstanceParseError(n, hcol, f"loop at '{tail}'")
            label = None
            if keyword == "arc":
                has_arc_line = True
                if group is None:
                    raise exceptions.InstanceParseError(n, toks[3][1], "label given before any group line")
                try:
                    label = group.parse_element("".join(tok for tok, _ in toks[3:]))
                except exceptions.GroupError as e:
                    raise exceptions.InstanceParseError(n, toks[3][1], str(e))
            arcs.append((tail, head, label))
            vertices.extend([tail, head])
        else:
            raise exceptions.InstanceParseError(n, col, f"unknown keyword '{keyword}'")
    if group is None:
        if has_arc_line:
            raise exceptions.InstanceParseError(1, 1, "no group line")
        group = Cyclic(1)
    one = group.identity()
    built = [Arc(i, tail, head, one if label is None else label) for i, (tail, head, label) in enumerate(arcs)]
    seen = {}
    for arc in built:
        key = frozenset(arc.ends)
        if key in seen:
            diagnostics.append(f"arcs {seen[key]} and {arc.id} are parallel")
        seen.setdefault(key, arc.id)
    return LabeledGraph(group, vertices, built), diagnostics


def read_instance(ifile):
    with open(ifile, encoding="utf-8") as ifh:
        graph, diagnostics = parse_instance(ifh.read())
    for remark in diagnostics:
        logger.warning("%s: %s", ifile, remark)
    return graph


def format_witness(label, path):
    return f"  label {label}: {path} [arcs {','.join(str(a) for a in path.arcs)}]"


def format_summary(graph, summary):
    labels = ", ".join(str(x) for x in summary.labels)
    if summary.classification == cc.EMPTY:
        head = "no s-t path"
    elif summary.classification == cc.ONE:
        head = f"one label: {labels}"
    elif summary.classification == cc.TWO:
        head = f"two labels: {labels}"
    elif graph.group == Cyclic(3):
        head = f"three labels: {labels}"
    else:
        head = f"at least three labels: {labels}"
    return [head] + [format_witness(x, p) for x, p in zip(summary.labels, summary.witnesses)]


def _parse_group_option(text):
    kind, _, params = text.partition(":")
    return parse_group(kind, [p for p in params.split(",") if p])


def _parse_pairs(text):
    pairs = []
    for item in text.split(","):
        s, sep, t = item.partition(":")
        if not sep or not s or not t:
            raise exceptions.PreconditionError(f"terminal pair '{item}' is not of the form s:t")
        pairs.append((s, t))
    return pairs


def build_parser():
    parser = argparse.ArgumentParser(prog="glpaths", description="Path labels in group-labeled graphs")
    parser.add_argument("--json", action="store_true", help="structured output")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--enum-limit", type=int, default=cc.ENUM_LIMIT,
                        help="enumerate s-t paths at or below this many vertices (at least 6)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("labels", help="classify the s-t path label set")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p = sub.add_parser("avoid", help="an s-t path avoiding two labels")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--forbid", required=True, help="two labels, comma separated")
    p = sub.add_parser("three", help="three s-t paths with distinct labels")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p = sub.add_parser("balanced", help="test whether every cycle has identity label")
    p.add_argument("file")
    for name, helptext in (("disjoint2", "two vertex-disjoint paths"),
                           ("oracle-disjoint", "two vertex-disjoint paths by exhaustive search")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        for term in ("s1", "t1", "s2", "t2"):
            p.add_argument(term)
    p = sub.add_parser("oracle-labels", help="s-t path labels by exhaustive search")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--cap", type=int, default=3)
    p = sub.add_parser("gen", help="emit a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=int, default=6)
    p.add_argument("--edges", type=int, default=10)
    p.add_argument("--group", default="cyclic:3", help="e.g. cyclic:3, integer, symmetric:4, free:a,b")
    p = sub.add_parser("kdisjoint", help="k-disjoint-paths instance construction only")
    p.add_argument("file")
    p.add_argument("pairs", help="s1:t1,s2:t2,...")
    p = sub.add_parser("dot", help="Graphviz export")
    p.add_argument("file")
    return parser


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _run_command(args, si):
    cmd = args.command
    if cmd == "gen":
        group = _parse_group_option(args.group)
        rng = np.random.default_rng(args.seed)
        graph = random_graph(rng, group, args.vertices, args.edges)
        text = to_instance_text(graph, comments=[f"seed {args.seed}"])
        _emit(args, {"command": cmd, "instance": graph.to_dict()}, [text.rstrip("\n")])
        return cc.EXIT_ANSWERED
    graph = read_instance(args.file)
    if cmd == "labels":
        if graph.group == Cyclic(3):
            summary = z3_labels(graph, args.s, args.t, si=si)
        else:
            summary = test_two_labels(graph, args.s, args.t, si=si)
        _emit(args, {"command": cmd, "result": summary.to_dict(), "stats": si.to_dict()},
              format_summary(graph, summary))
        return cc.EXIT_ANSWERED
    if cmd == "avoid":
        texts = re.split(r",(?![^()]*\))", args.forbid)
        if len(texts) != 2:
            raise exceptions.PreconditionError("--forbid needs exactly two labels")
        alpha, beta = [graph.group.parse_element(x) for x in texts]
        found = forbidden_two_path(graph, args.s, args.t, alpha, beta, si=si)
        if isinstance(found, Contained):
            _emit(args, {"command": cmd, "result": found.to_dict()}, ["contained"])
            return cc.EXIT_NEGATIVE
        label = walk_label(graph, found)
        _emit(args, {"command": cmd, "result": {"label": label.to_text(), "path": found.to_dict()}},
              ["found", format_witness(label, found)])
        return cc.EXIT_ANSWERED
    if cmd == "three":
        summary = test_two_labels(graph, args.s, args.t, find_three=False, si=si)
        if summary.classification != cc.THREE_OR_MORE:
            _emit(args, {"command": cmd, "result": summary.to_dict()}, ["fewer than three labels"])
            return cc.EXIT_NEGATIVE
        paths = find_three_paths(graph, args.s, args.t, si=si)
        summary = LabelSummary.from_paths(graph, cc.THREE_OR_MORE, paths)
        _emit(args, {"command": cmd, "result": summary.to_dict()}, format_summary(graph, summary))
        return cc.EXIT_ANSWERED
    if cmd == "balanced":
        ok, cycle = is_balanced(graph)
        line = "balanced" if ok else f"unbalanced; witness cycle: {cycle}"
        payload = {"command": cmd, "balanced": ok, "cycle": None if cycle is None else cycle.to_dict()}
        _emit(args, payload, [line])
        return cc.EXIT_ANSWERED
    if cmd in ("disjoint2", "oracle-disjoint"):
        if cmd == "disjoint2":
            found = solve_2disjoint(graph, args.s1, args.t1, args.s2, args.t2, si=si)
        else:
            found = disjoint_paths_bruteforce(graph, [(args.s1, args.t1), (args.s2, args.t2)])
        if isinstance(found, Infeasible):
            _emit(args, {"command": cmd, "result": found.to_dict()}, ["infeasible"])
            return cc.EXIT_NEGATIVE
        lines = ["disjoint paths found"] + [f"  path {i + 1}: {p} [arcs {','.join(str(a) for a in p.arcs)}]"
                                            for i, p in enumerate(found)]
        _emit(args, {"command": cmd, "result": [p.to_dict() for p in found]}, lines)
        return cc.EXIT_ANSWERED
    if cmd == "oracle-labels":
        labels = sorted(label_set_bruteforce(graph, args.s, args.t, cap=args.cap), key=graph.group.sort_key)
        overflow = len(labels) > args.cap
        text = ", ".join(str(x) for x in labels)
        line = f"more than {args.cap} labels: {text}" if overflow else f"labels: {text}"
        _emit(args, {"command": cmd, "labels": [x.to_text() for x in labels], "overflow": overflow}, [line])
        return cc.EXIT_ANSWERED
    if cmd == "kdisjoint":
        inst = reduce_kdisjoint(graph, _parse_pairs(args.pairs))
        comments = ["instance construction only", f"s {inst.s}", f"t {inst.t}", f"target {inst.target}"]
        _emit(args, {"command": cmd, "result": inst.to_dict()},
              [to_instance_text(inst.graph, comments).rstrip("\n")])
        return cc.EXIT_ANSWERED
    if cmd == "dot":
        _emit(args, {"command": cmd, "dot": to_dot(graph)}, [to_dot(graph).rstrip("\n")])
        return cc.EXIT_ANSWERED
    raise exceptions.ModelError(f"unknown command '{cmd}'")


def run(argv=None):
    """
    Runs one command

    Returns
    -------
    int
        0 when answered, 1 for infeasible or contained verdicts, 2 for usage and input errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return cc.EXIT_USAGE if e.code else cc.EXIT_ANSWERED
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        si = SolverInstance(enum_limit=args.enum_limit)
        return _run_command(args, si)
    except (exceptions.ModelError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return cc.EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
