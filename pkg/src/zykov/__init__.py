"""Exact tools for the Zykov and Blanche Descartes graph classes."""

from .graph import Color, GadgetGraph, Graph, connected_components, girth, induced_subgraph, structure_flags, subdivide
from .exact import Unknown, exact_chromatic_number, exact_max_independent_set
from .io import FormatError, emit_graph, parse_graph
from .splitting import STRONG, WEAK, SearchOutcome, SplitMode, Status, find_splitting, is_splitting, is_stable_set, propagate, verify_stable_forest_partition
from .recognizer import NonMembershipWitness, PeelCertificate, Verdict, class_consistency, recognize, verify_non_membership, verify_peel
from .generators import LayeredGraph, descartes, gallery, zykov
from .reductions import (CnfInstance, assignment_to_splitting_set, coloring_reduction, mis_reduction, parse_dimacs_cnf,
                         sat_to_bd, sat_to_zykov, splitting_set_to_assignment, unequality_gadget)
from .spectral import SpectralReport, expansion_non_zykov, mixing_check, second_eigenvalue_abs

__version__ = "0.1.0"
