"""Finite directed graphs and the constructions on them"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping
import itertools
import json

import networkx as nx

from utils.errors import InputError

# Reserved vertex identifier of the extra vertex in a pointed graph
BOTTOM = "_|_"

Edge = tuple[str, str]


@dataclass(frozen=True)
class Graph:
    """A finite directed graph; loops allowed, no multi-edges.

    Vertex identifiers are opaque strings. Isolated vertices are kept
    explicitly in ``vertices``.
    """
    vertices: frozenset[str] = frozenset()
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")

    @classmethod
    def build(cls, vertices: Iterable = (), edges: Iterable = ()) -> "Graph":
        """Build a graph from any iterables; identifiers are converted to str.

        Edge endpoints missing from ``vertices`` are added.
        """
        edge_set = frozenset((str(u), str(v)) for u, v in edges)
        vertex_set = frozenset(str(v) for v in vertices)
        vertex_set |= {u for u, _ in edge_set} | {v for _, v in edge_set}
        return cls(vertex_set, edge_set)

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def ordered_vertices(self) -> tuple[str, ...]:
        """Vertices in ascending identifier order"""
        return tuple(sorted(self.vertices))

    @cached_property
    def _successors(self) -> Mapping[str, tuple[str, ...]]:
        succ: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            succ[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in succ.items()}

    @cached_property
    def _predecessors(self) -> Mapping[str, tuple[str, ...]]:
        pred: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            pred[v].append(u)
        return {v: tuple(sorted(us)) for v, us in pred.items()}

    def successors(self, v: str) -> tuple[str, ...]:
        """Out-neighbours of v in ascending order"""
        self.require_vertex(v)
        return self._successors[v]

    def predecessors(self, v: str) -> tuple[str, ...]:
        self.require_vertex(v)
        return self._predecessors[v]

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges

    def has_loop(self, v: str) -> bool:
        return (v, v) in self.edges

    def require_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise InputError(f"unknown vertex {v!r}")

    @cached_property
    def _digraph(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.ordered_vertices)
        digraph.add_edges_from(sorted(self.edges))
        return nx.freeze(digraph)

    def to_networkx(self) -> nx.DiGraph:
        """A frozen networkx view with nodes inserted in ascending order, built once per graph"""
        return self._digraph

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        """Rename vertices through an injective mapping"""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise InputError("relabelling must be injective")
        return Graph(
            frozenset(mapping[v] for v in self.vertices),
            frozenset((mapping[u], mapping[v]) for u, v in self.edges),
        )

    def __str__(self) -> str:
        edges = ", ".join(f"{u}->{v}" for u, v in sorted(self.edges))
        return f"Graph(V={{{', '.join(self.ordered_vertices)}}}, E={{{edges}}})"


EMPTY_GRAPH = Graph()


@dataclass(frozen=True)
class VertexMap:
    """A total vertex map between two graphs, tagged with its verified kind.

    ``kind`` is either ``"homomorphism"`` or ``"strong"``.
    """
    domain: Graph
    codomain: Graph
    images: Mapping[str, str] = field(compare=False)
    kind: str = "homomorphism"
    _pairs: tuple[tuple[str, str], ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_pairs", tuple(sorted(self.images.items())))

    def __getitem__(self, v: str) -> str:
        return self.images[v]

    @property
    def is_strong(self) -> bool:
        return self.kind == "strong"

    def as_dict(self) -> dict[str, str]:
        return dict(self._pairs)


def check_vertex_map(domain: Graph, codomain: Graph, images: Mapping[str, str]) -> str | None:
    """Classify a total map as 'strong', 'homomorphism', or None if neither"""
    if set(images) != domain.vertices:
        raise InputError("vertex map must be total on the domain")
    for v in images.values():
        codomain.require_vertex(v)
    strong = True
    for u in domain.vertices:
        for v in domain.vertices:
            image_edge = codomain.has_edge(images[u], images[v])
            if domain.has_edge(u, v):
                if not image_edge:
                    return None
            elif image_edge:
                strong = False
    return "strong" if strong else "homomorphism"


def make_vertex_map(domain: Graph, codomain: Graph, images: Mapping[str, str],
                    strong: bool = False) -> VertexMap:
    """Verify a map and return it tagged; raises InputError if it does not qualify"""
    kind = check_vertex_map(domain, codomain, images)
    if kind is None or (strong and kind != "strong"):
        wanted = "strong homomorphism" if strong else "homomorphism"
        raise InputError(f"map is not a {wanted}")
    return VertexMap(domain, codomain, dict(images), kind)


def is_homomorphism(domain: Graph, codomain: Graph, images: Mapping[str, str]) -> bool:
    return check_vertex_map(domain, codomain, images) is not None


def is_strong_homomorphism(domain: Graph, codomain: Graph, images: Mapping[str, str]) -> bool:
    return check_vertex_map(domain, codomain, images) == "strong"


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    """The subgraph of g induced by a vertex subset"""
    chosen = frozenset(subset)
    for v in chosen:
        g.require_vertex(v)
    return Graph(chosen, frozenset((u, v) for u, v in g.edges if u in chosen and v in chosen))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Union of relabelled copies; vertex v of the i-th graph becomes 'i:v'"""
    vertices: set[str] = set()
    edges: set[Edge] = set()
    for i, g in enumerate(graphs):
        vertices |= {f"{i}:{v}" for v in g.vertices}
        edges |= {(f"{i}:{u}", f"{i}:{v}") for u, v in g.edges}
    return Graph(frozenset(vertices), frozenset(edges))


def product_vertex_id(coordinates: Iterable[str]) -> str:
    """Identifier of a product vertex: its coordinate list as compact JSON"""
    return json.dumps(list(coordinates), separators=(",", ":"), ensure_ascii=False)


def product_coordinates(vertex: str) -> tuple[str, ...]:
    """Inverse of product_vertex_id"""
    try:
        coords = json.loads(vertex)
    except json.JSONDecodeError as e:
        raise InputError(f"{vertex!r} is not a product vertex") from e
    if not isinstance(coords, list):
        raise InputError(f"{vertex!r} is not a product vertex")
    return tuple(str(c) for c in coords)


def direct_product(graphs: Iterable[Graph]) -> Graph:
    """Categorical product: an edge between tuples iff an edge in every coordinate.

    The product of the empty family is one vertex with a loop.
    """
    factors = list(graphs)
    tuples = list(itertools.product(*(f.ordered_vertices for f in factors)))
    vertices = frozenset(product_vertex_id(t) for t in tuples)
    edges = set()
    for a in tuples:
        for b in tuples:
            if all(f.has_edge(x, y) for f, x, y in zip(factors, a, b)):
                edges.add((product_vertex_id(a), product_vertex_id(b)))
    return Graph(vertices, frozenset(edges))


def pointed(g: Graph) -> Graph:
    """Add the vertex BOTTOM with an edge to every vertex, itself included"""
    if BOTTOM in g.vertices:
        raise InputError(f"graph already uses the reserved vertex {BOTTOM!r}")
    vertices = g.vertices | {BOTTOM}
    return Graph(vertices, g.edges | {(BOTTOM, v) for v in vertices})


def pointed_product(graphs: Iterable[Graph]) -> Graph:
    return direct_product(pointed(g) for g in graphs)


@dataclass(frozen=True)
class ProductVertex:
    """A vertex of a pointed product: one coordinate per index, BOTTOM allowed"""
    indices: tuple
    coordinates: tuple[str, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.coordinates):
            raise InputError("one coordinate per index is required")

    def __getitem__(self, index) -> str:
        return self.coordinates[self.indices.index(index)]

    def support(self) -> frozenset:
        """Indices whose coordinate is not BOTTOM"""
        return frozenset(i for i, c in zip(self.indices, self.coordinates) if c != BOTTOM)

    @property
    def vertex_id(self) -> str:
        return product_vertex_id(self.coordinates)


def complement(g: Graph) -> Graph:
    """Loopless complement: (u, v) with u != v is an edge iff it is not one in g"""
    return Graph(g.vertices, frozenset(
        (u, v) for u in g.vertices for v in g.vertices if u != v and (u, v) not in g.edges
    ))


def is_undirected(g: Graph) -> bool:
    return all((v, u) in g.edges for u, v in g.edges)
