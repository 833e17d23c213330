"""Forbidden-subgraph classes as implication sets"""

from forbidden.gluing import (
    INTERIOR_PREFIX,
    ROOT,
    PhiAssignment,
    build_G_phi,
    build_T_phi,
    glue_with_tree,
    interior_vertex,
    source_transversal_valid,
)
from forbidden.implications import (
    graph_implication,
    host_bound,
    perfect_graph_axioms,
    phi_assignments,
    term_graph_implication,
    xi_family,
    xi_implication,
)
from forbidden.oracle import forbidden_membership, forbidden_occurrence
from forbidden.paths import finite_paths, path_membership

__all__ = [
    'INTERIOR_PREFIX',
    'ROOT',
    'PhiAssignment',
    'build_G_phi',
    'build_T_phi',
    'finite_paths',
    'forbidden_membership',
    'forbidden_occurrence',
    'glue_with_tree',
    'graph_implication',
    'host_bound',
    'interior_vertex',
    'path_membership',
    'perfect_graph_axioms',
    'phi_assignments',
    'source_transversal_valid',
    'term_graph_implication',
    'xi_family',
    'xi_implication',
]
