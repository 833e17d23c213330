"""Term graphs: G(t) for a nontrivial term t, and a term for every rooted graph"""
from typing import NamedTuple

from graphs.graph import Graph
from graphs.reachability import reach, root_of
from terms.term import Application, Term, Variable, is_trivial, leftmost, variables
from utils.errors import InputError


class TermGraph(NamedTuple):
    graph: Graph
    root: str


def _edges(t: Term) -> set[tuple[str, str]]:
    if isinstance(t, Application):
        return _edges(t.left) | _edges(t.right) | {(leftmost(t.left), leftmost(t.right))}
    return set()


def term_graph(t: Term) -> TermGraph:
    """G(t) with its root L(t); every vertex is reachable from the root"""
    if is_trivial(t):
        raise InputError(f"trivial term {t} has no term graph")
    graph = Graph(variables(t), frozenset(_edges(t)))
    return TermGraph(graph, leftmost(t))


def is_term_graph(g: Graph) -> str | None:
    """The least vertex from which every vertex is reachable, or None"""
    return root_of(g)


def graph_to_term(g: Graph, root: str) -> Term:
    """A term t with G(t) == g and L(t) == root, variables named by vertices.

    Depth-first from the root: the subterm of v is v applied, in ascending
    order, to the subterm of each unvisited out-neighbour or to the bare
    variable of each visited one. Every out-edge contributes exactly one
    (v, neighbour) pair.
    """
    g.require_vertex(root)
    if reach(g, root) != g.vertices:
        raise InputError(f"vertex {root!r} does not reach every vertex")

    visited: set[str] = set()

    def build(v: str) -> Term:
        visited.add(v)
        result: Term = Variable(v)
        for w in g.successors(v):
            result = Application(result, Variable(w) if w in visited else build(w))
        return result

    return build(root)
