"""Brute-force G-freeness over the induced term subgraphs of a host graph"""
import itertools

from data.limits import MAX_FORBIDDEN_HOST_VERTICES
from graphs.graph import Graph, VertexMap, induced_subgraph
from graphs.homomorphisms import first_homomorphism
from graphs.reachability import root_of
from utils.errors import CapacityError


def forbidden_occurrence(g: Graph, h: Graph, force: bool = False) -> tuple[frozenset[str], VertexMap] | None:
    """The first vertex set U of H (by size, then lexicographically) inducing a
    term graph that G maps strongly into, with the map; None if H is G-free.

    Raises:
        CapacityError: H has more vertices than the configured limit
    """
    if len(h.vertices) > MAX_FORBIDDEN_HOST_VERTICES and not force:
        raise CapacityError(
            f"host graph with {len(h.vertices)} vertices exceeds the limit of "
            f"{MAX_FORBIDDEN_HOST_VERTICES}; use force")
    vertices = h.ordered_vertices
    for size in range(1, len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            sub = induced_subgraph(h, subset)
            if root_of(sub) is None:
                continue
            found = first_homomorphism(g, sub, strong=True)
            if found is not None:
                return frozenset(subset), found
    return None


def forbidden_membership(g: Graph, h: Graph, force: bool = False) -> bool:
    """True iff H is G-free"""
    return forbidden_occurrence(g, h, force) is None
