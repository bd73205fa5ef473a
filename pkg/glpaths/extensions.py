from glpaths.lgraph import Walk


def to_instance_text(graph, comments=()):
    """
    Writes `graph` in the line-oriented instance format read by glpaths.cli.parse_instance

    Vertices are listed first so isolated vertices and the vertex order survive a round trip;
    arcs follow in id order.
    """
    lines = ['# %s' % c for c in comments]
    lines.append('group %s' % graph.group)
    for v in graph.vertices:
        lines.append('vertex %s' % v)
    for arc in graph.arcs:
        lines.append('arc %s %s %s' % (arc.tail, arc.head, arc.label.to_text()))
    return '\n'.join(lines) + '\n'


def to_instance_file(graph, ofile, comments=()):
    with open(ofile, 'w', encoding='utf-8') as ofh:
        ofh.write(to_instance_text(graph, comments))


def to_dot(graph, highlight=None, name='G'):
    """
    Graphviz source for the graph, with arc labels as edge labels

    Parameters
    ----------
    highlight: Walk or iterable of arc ids, optional
        Arcs drawn bold and red
    """
    if isinstance(highlight, Walk):
        highlight = highlight.arcs
    marked = set(highlight or ())
    lines = ['digraph %s {' % name]
    for v in graph.vertices:
        lines.append('  "%s";' % v)
    for arc in graph.arcs:
        attrs = ['label="%s"' % arc.label.to_text()]
        if arc.id in marked:
            attrs += ['color=red', 'penwidth=2']
        if arc.virtual:
            attrs.append('style=dashed')
        lines.append('  "%s" -> "%s" [%s];' % (arc.tail, arc.head, ', '.join(attrs)))
    lines.append('}')
    return '\n'.join(lines) + '\n'
