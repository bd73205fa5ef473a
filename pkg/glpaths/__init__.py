from glpaths.solver_instance import SolverInstance
from glpaths import exceptions
from glpaths import cc
from glpaths.group import Cyclic, Integer, Symmetric, Free, GroupElement, parse_group
from glpaths.lgraph import Arc, Walk, Path, LabeledGraph, walk_label, validate_path, normalize_to_D
from glpaths import normalize, connectivity, contraction, planar, oracle, reduce
from glpaths.normalize import is_balanced, nonzero_path
from glpaths.solve import test_two_labels, label_summary, find_three_paths, forbidden_two_path, z3_labels
from glpaths.reduce import reduce_2disjoint, solve_2disjoint, reduce_kdisjoint
import glpaths.tools
from glpaths.__about__ import __version__
from glpaths import results
