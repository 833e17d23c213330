"""Finite directed graphs: constructions, reachability and homomorphism search"""

from graphs.graph import (
    BOTTOM,
    EMPTY_GRAPH,
    Graph,
    ProductVertex,
    VertexMap,
    check_vertex_map,
    complement,
    direct_product,
    disjoint_union,
    induced_subgraph,
    is_homomorphism,
    is_strong_homomorphism,
    is_undirected,
    make_vertex_map,
    pointed,
    pointed_product,
    product_coordinates,
    product_vertex_id,
)
from graphs.reachability import (
    connected_components,
    covered_by,
    is_valid_transversal,
    reach,
    root_of,
    sccs,
    sources,
    transversal,
)
from graphs.homomorphisms import (
    IsomorphismResult,
    enumerate_homomorphisms,
    first_homomorphism,
    is_isomorphic,
    strong_homomorphic_images,
)

__all__ = [
    'BOTTOM',
    'EMPTY_GRAPH',
    'Graph',
    'IsomorphismResult',
    'ProductVertex',
    'VertexMap',
    'check_vertex_map',
    'complement',
    'connected_components',
    'covered_by',
    'direct_product',
    'disjoint_union',
    'enumerate_homomorphisms',
    'first_homomorphism',
    'induced_subgraph',
    'is_homomorphism',
    'is_isomorphic',
    'is_strong_homomorphism',
    'is_undirected',
    'is_valid_transversal',
    'make_vertex_map',
    'pointed',
    'pointed_product',
    'product_coordinates',
    'product_vertex_id',
    'reach',
    'root_of',
    'sccs',
    'sources',
    'strong_homomorphic_images',
    'transversal',
]
