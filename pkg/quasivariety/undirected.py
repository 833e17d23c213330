"""Membership for undirected graphs, decided on connected components.

For undirected W, reach(a) is the connected component of a, so W belongs to
the quasivariety generated by K iff
  (1) every one-vertex component has a strong homomorphism into some G in K,
  (2) every two distinct vertices of a component H are separated by some
      strong homomorphism H -> G, G in K.
"""
from typing import Sequence
import itertools

from graphs.graph import Graph, induced_subgraph, is_undirected
from graphs.homomorphisms import first_homomorphism
from graphs.reachability import connected_components
from utils.errors import InputError


def undirected_membership(w: Graph, k: Sequence[Graph]) -> bool:
    """Decide membership for undirected W and K by the component conditions"""
    k = list(k)
    if not is_undirected(w) or not all(is_undirected(g) for g in k):
        raise InputError("undirected_membership needs undirected graphs")
    for component in connected_components(w):
        h = induced_subgraph(w, component)
        if len(component) == 1:
            if not any(first_homomorphism(h, g, strong=True) for g in k):
                return False
            continue
        for a, b in itertools.combinations(sorted(component), 2):
            if not any(first_homomorphism(h, g, strong=True, distinct=(a, b)) for g in k):
                return False
    return True
