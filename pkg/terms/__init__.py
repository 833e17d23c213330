"""The term language of graph algebras"""

from terms.term import (
    INFINITY,
    Application,
    Infinity,
    Term,
    Variable,
    apply,
    depth,
    is_trivial,
    leftmost,
    rename,
    size,
    variables,
)
from terms.parser import format_term, parse_term
from terms.term_graph import TermGraph, graph_to_term, is_term_graph, term_graph

__all__ = [
    'INFINITY',
    'Application',
    'Infinity',
    'Term',
    'TermGraph',
    'Variable',
    'apply',
    'depth',
    'format_term',
    'graph_to_term',
    'is_term_graph',
    'is_trivial',
    'leftmost',
    'parse_term',
    'rename',
    'size',
    'term_graph',
    'variables',
]
