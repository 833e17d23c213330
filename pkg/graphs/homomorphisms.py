"""Backtracking search for (strong) homomorphisms, isomorphism tests and images"""
from dataclasses import dataclass
from typing import Iterator, Mapping
from collections import Counter, deque

from networkx.algorithms.isomorphism import DiGraphMatcher

from data.limits import MAX_IMAGE_VERTICES
from graphs.graph import Graph, VertexMap, check_vertex_map
from utils.errors import CapacityError


def search_order(g: Graph) -> list[str]:
    """BFS order over the underlying undirected graph, roots taken in ascending order.

    Assigning a vertex right after one of its neighbours lets the search prune
    on edge constraints as early as possible.
    """
    order: list[str] = []
    seen: set[str] = set()
    for root in g.ordered_vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(set(g.successors(u)) | set(g.predecessors(u))):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def enumerate_homomorphisms(g: Graph, h: Graph, strong: bool = False,
                            fixed: Mapping[str, str] | None = None,
                            distinct: tuple[str, str] | None = None) -> Iterator[VertexMap]:
    """Lazily yield every homomorphism g -> h, in a deterministic order.

    Args:
        g: Domain graph
        h: Codomain graph
        strong: Only yield strong homomorphisms (non-edges map to non-edges)
        fixed: Vertices of g whose image is prescribed
        distinct: A pair (a, b) of vertices of g that must get different images

    Yields:
        VertexMap objects tagged with their kind
    """
    fixed = dict(fixed or {})
    for v, image in fixed.items():
        g.require_vertex(v)
        h.require_vertex(image)
    if distinct is not None:
        for v in distinct:
            g.require_vertex(v)
        if distinct[0] == distinct[1]:
            return

    order = search_order(g)
    position = {v: i for i, v in enumerate(order)}
    # For every vertex: the earlier vertices whose pair with it must be checked
    checks: list[list[str]] = []
    for i, v in enumerate(order):
        if strong:
            earlier = order[:i]
        else:
            adjacent = set(g.successors(v)) | set(g.predecessors(v))
            earlier = [u for u in order[:i] if u in adjacent]
        checks.append(earlier)
    partner = {}
    if distinct is not None:
        a, b = distinct
        later, earlier_one = (a, b) if position[a] > position[b] else (b, a)
        partner[later] = earlier_one

    candidates = h.ordered_vertices
    assignment: dict[str, str] = {}

    def consistent(v: str, image: str, i: int) -> bool:
        if g.has_edge(v, v) != h.has_edge(image, image):
            if g.has_edge(v, v) or strong:
                return False
        for u in checks[i]:
            for (x, y), (ix, iy) in (((v, u), (image, assignment[u])), ((u, v), (assignment[u], image))):
                if g.has_edge(x, y):
                    if not h.has_edge(ix, iy):
                        return False
                elif strong and h.has_edge(ix, iy):
                    return False
        if v in partner and assignment[partner[v]] == image:
            return False
        return True

    def extend(i: int) -> Iterator[VertexMap]:
        if i == len(order):
            images = dict(assignment)
            kind = "strong" if strong else check_vertex_map(g, h, images)
            yield VertexMap(g, h, images, kind)
            return
        v = order[i]
        options = (fixed[v],) if v in fixed else candidates
        for image in options:
            if consistent(v, image, i):
                assignment[v] = image
                yield from extend(i + 1)
                del assignment[v]

    yield from extend(0)


def first_homomorphism(g: Graph, h: Graph, strong: bool = False,
                       fixed: Mapping[str, str] | None = None,
                       distinct: tuple[str, str] | None = None) -> VertexMap | None:
    """The first map enumerate_homomorphisms would yield, or None"""
    return next(enumerate_homomorphisms(g, h, strong, fixed, distinct), None)


def _degree_profile(g: Graph) -> Counter:
    out_deg = Counter(u for u, _ in g.edges)
    in_deg = Counter(v for _, v in g.edges)
    return Counter((out_deg[v], in_deg[v], g.has_loop(v)) for v in g.vertices)


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    witness: VertexMap | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphic(g: Graph, h: Graph) -> IsomorphismResult:
    """Decide g ≅ h; the witness is the first bijective strong homomorphism VF2 finds"""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return IsomorphismResult(False)
    if _degree_profile(g) != _degree_profile(h):
        return IsomorphismResult(False)
    matcher = DiGraphMatcher(g.to_networkx(), h.to_networkx())
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return IsomorphismResult(False)
    return IsomorphismResult(True, VertexMap(g, h, dict(mapping), "strong"))


def set_partitions(items: list[str]) -> Iterator[list[list[str]]]:
    """All partitions of a list into nonempty blocks"""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def strong_homomorphic_images(g: Graph, force: bool = False) -> list[tuple[Graph, VertexMap]]:
    """Every strong homomorphic image of g up to isomorphism, with the quotient map.

    A partition yields a strong image iff the edge relation is constant between
    (and within) blocks. Exponential; intended for small graphs.
    """
    if len(g.vertices) > MAX_IMAGE_VERTICES and not force:
        raise CapacityError(
            f"strong_homomorphic_images on {len(g.vertices)} vertices exceeds "
            f"the limit of {MAX_IMAGE_VERTICES}; use force"
        )
    images: list[tuple[Graph, VertexMap]] = []
    for partition in set_partitions(list(g.ordered_vertices)):
        block_of = {v: min(block) for block in partition for v in block}
        quotient = Graph.build(
            {block_of[v] for v in g.vertices},
            {(block_of[u], block_of[v]) for u, v in g.edges},
        )
        if check_vertex_map(g, quotient, block_of) != "strong":
            continue
        if any(is_isomorphic(quotient, seen) for seen, _ in images):
            continue
        images.append((quotient, VertexMap(g, quotient, block_of, "strong")))
    return images
