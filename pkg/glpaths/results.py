from glpaths import cc
from glpaths import exceptions
from glpaths.base_model import GlpObject
from glpaths.lgraph import walk_label


class LabelSummary(GlpObject):
    """
    Classification of the s-t path label set, capped at three labels

    Parameters
    ----------
    classification: str
        One of cc.EMPTY, cc.ONE, cc.TWO, cc.THREE_OR_MORE
    labels: list of GroupElement
        Pairwise distinct labels, sorted by the group's element order
    witnesses: list of Path
        witnesses[i] is an s-t path with label labels[i]
    """
    op_type = "label_summary"

    def __init__(self, classification, labels=(), witnesses=()):
        if len(labels) != len(witnesses):
            raise exceptions.ModelError("every label needs exactly one witness path")
        self.classification = classification
        self.labels = list(labels)
        self.witnesses = list(witnesses)

    @classmethod
    def empty(cls):
        return cls(cc.EMPTY)

    @classmethod
    def three_or_more(cls):
        return cls(cc.THREE_OR_MORE)

    @classmethod
    def from_paths(cls, graph, classification, paths):
        pairs = [(walk_label(graph, p), p) for p in paths]
        pairs.sort(key=lambda pair: graph.group.sort_key(pair[0]))
        return cls(classification, [pair[0] for pair in pairs], [pair[1] for pair in pairs])

    @property
    def n_labels(self):
        """Number of labels for EMPTY/ONE/TWO; at least three for THREE_OR_MORE"""
        if self.classification == cc.THREE_OR_MORE:
            return max(3, len(self.labels))
        return len(self.labels)

    def __repr__(self):
        return f"LabelSummary({self.classification}: {', '.join(str(x) for x in self.labels)})"


class Contained(GlpObject):
    """Verdict that every s-t path label lies in `forbidden`"""
    op_type = "contained"

    def __init__(self, forbidden):
        self.forbidden = list(forbidden)

    def __bool__(self):
        return False


class Infeasible(GlpObject):
    op_type = "infeasible"

    def __init__(self, reason=""):
        self.reason = reason

    def __bool__(self):
        return False


class NonPlanar(GlpObject):
    op_type = "non_planar"

    def __bool__(self):
        return False
