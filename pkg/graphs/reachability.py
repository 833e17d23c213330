"""Reachability, strongly connected components and source transversals"""
import networkx as nx

from graphs.graph import Graph
from utils.errors import InputError


def reach(g: Graph, v: str) -> frozenset[str]:
    """All vertices reachable from v by a walk, v itself included"""
    g.require_vertex(v)
    return frozenset(nx.descendants(g.to_networkx(), v)) | {v}


def sccs(g: Graph) -> list[frozenset[str]]:
    """Strongly connected components, ordered by their least vertex"""
    components = [frozenset(c) for c in nx.strongly_connected_components(g.to_networkx())]
    return sorted(components, key=min)


def sources(g: Graph) -> list[frozenset[str]]:
    """Components with no edge entering them from outside"""
    components = sccs(g)
    index = {v: i for i, comp in enumerate(components) for v in comp}
    entered = {index[v] for u, v in g.edges if index[u] != index[v]}
    return [comp for i, comp in enumerate(components) if i not in entered]


def transversal(g: Graph) -> list[str]:
    """The canonical source transversal: the least vertex of every source"""
    return sorted(min(comp) for comp in sources(g))


def is_valid_transversal(g: Graph, chosen: list[str]) -> bool:
    """True iff ``chosen`` picks exactly one vertex from every source"""
    srcs = sources(g)
    if len(chosen) != len(srcs) or len(set(chosen)) != len(chosen):
        return False
    return all(sum(1 for a in chosen if a in comp) == 1 for comp in srcs)


def covered_by(g: Graph, roots: list[str]) -> frozenset[str]:
    """Union of reach(a) over the given roots"""
    covered: set[str] = set()
    for a in roots:
        covered |= reach(g, a)
    return frozenset(covered)


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Weakly connected components, ordered by their least vertex"""
    components = [frozenset(c) for c in nx.weakly_connected_components(g.to_networkx())]
    return sorted(components, key=min)


def root_of(g: Graph) -> str | None:
    """Least vertex reaching every vertex, or None"""
    if not g.vertices:
        raise InputError("the empty graph has no root")
    for v in g.ordered_vertices:
        if len(reach(g, v)) == len(g.vertices):
            return v
    return None
