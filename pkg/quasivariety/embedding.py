"""Strong pointed subproduct embeddings of members.

For a member W, every vertex a and every unordered pair {a, a'} with
reach(a) = reach(a') becomes an index i with a strong homomorphism φ_i on
reach(base). The coordinate maps φ̃_i extend φ_i by ⊥ outside reach(base),
and a ↦ (φ̃_i(a))_i embeds W into the pointed product of the factors.
"""
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from graphs.graph import (
    BOTTOM, Graph, ProductVertex, check_vertex_map, induced_subgraph, product_coordinates, product_vertex_id,
)
from graphs.reachability import reach
from quasivariety.membership import MembershipEvidence, SiteMap, membership
from utils.errors import ContractError, InputError

COND_INDUCED = "induced"
COND_SUPPORT = "support"
COND_STRONG = "strong"
COND_ISOMORPHISM = "isomorphism"


@dataclass(frozen=True)
class SpsIndex:
    """A vertex index (partner is None) or an unordered pair index"""
    base: str
    partner: str | None = None

    @property
    def kind(self) -> str:
        return "vertex" if self.partner is None else "pair"

    def __str__(self) -> str:
        return self.base if self.partner is None else f"{{{self.base},{self.partner}}}"


@dataclass(frozen=True)
class SpsEmbedding:
    """W together with its image W̃ inside the pointed product of the factors.

    ``coordinates[a][i]`` is φ̃_i(a); ``isomorphism[a]`` is the identifier of
    the image vertex ã in ``image``.
    """
    source: Graph
    indices: tuple[SpsIndex, ...]
    factors: tuple[Graph, ...]
    factor_refs: tuple[int, ...]
    coordinates: Mapping[str, tuple[str, ...]]
    image: Graph = Graph()
    isomorphism: Mapping[str, str] = field(default_factory=dict)

    def product_vertex(self, vertex_id: str) -> ProductVertex:
        return ProductVertex(self.indices, product_coordinates(vertex_id))

    def support(self, vertex_id: str) -> frozenset[SpsIndex]:
        """Y(ã) for an image vertex"""
        return self.product_vertex(vertex_id).support()


@dataclass(frozen=True)
class SpsVerification:
    ok: bool
    condition: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def pointed_edge(factor: Graph, x: str, y: str) -> bool:
    """Edge relation of the pointed graph factor^⊥"""
    if x == BOTTOM:
        return True
    return y != BOTTOM and factor.has_edge(x, y)


def _image_edges(vertex_coords: Mapping[str, tuple[str, ...]], factors: Sequence[Graph]) -> frozenset[tuple[str, str]]:
    edges = set()
    for u, cu in vertex_coords.items():
        for v, cv in vertex_coords.items():
            if all(pointed_edge(f, x, y) for f, x, y in zip(factors, cu, cv)):
                edges.add((u, v))
    return frozenset(edges)


def build_sps_embedding(w: Graph, k: Sequence[Graph], evidence: MembershipEvidence | None = None) -> SpsEmbedding:
    """Construct the explicit embedding of a member W.

    Raises:
        ContractError: W is not a member
    """
    k = list(k)
    for g in k:
        if BOTTOM in g.vertices:
            raise InputError(f"factor graphs may not use the reserved vertex {BOTTOM!r}")
    if evidence is None:
        evidence = membership(w, k)
    if not evidence.verdict:
        raise ContractError("W is not a member; no strong pointed subproduct embedding exists")

    entries: list[tuple[SpsIndex, SiteMap]] = []
    for a in w.ordered_vertices:
        entries.append((SpsIndex(a), evidence.vertex_maps[a]))
    for (a, b), site in sorted(evidence.pair_maps.items()):
        entries.append((SpsIndex(a, b), site))

    reaches = {a: evidence.reaches.get(a) or reach(w, a) for a in w.ordered_vertices}
    coordinates: dict[str, tuple[str, ...]] = {}
    for a in w.ordered_vertices:
        coordinates[a] = tuple(
            site.map[a] if a in reaches[index.base] else BOTTOM
            for index, site in entries
        )

    factors = tuple(k[site.factor] for _, site in entries)
    isomorphism = {a: product_vertex_id(coordinates[a]) for a in w.ordered_vertices}
    image_coords = {isomorphism[a]: coordinates[a] for a in w.ordered_vertices}
    image = Graph(frozenset(image_coords), _image_edges(image_coords, factors))

    return SpsEmbedding(
        source=w,
        indices=tuple(index for index, _ in entries),
        factors=factors,
        factor_refs=tuple(site.factor for _, site in entries),
        coordinates=coordinates,
        image=image,
        isomorphism=isomorphism,
    )


def verify_sps(e: SpsEmbedding) -> SpsVerification:
    """Check that the image is a strong pointed subproduct isomorphic to the source.

    Conditions, in the order checked: ``induced`` (coordinates well formed and
    the image is the induced subgraph of the pointed product), ``support``
    (no empty support), ``strong`` (each supported projection is strong on
    the reach of its vertex), ``isomorphism`` (a ↦ ã is a bijective strong
    homomorphism matching the coordinate table).
    """
    if len(e.factors) != len(e.indices):
        return SpsVerification(False, COND_INDUCED, "one factor per index is required")

    image_coords: dict[str, tuple[str, ...]] = {}
    for vertex_id in e.image.ordered_vertices:
        try:
            coords = product_coordinates(vertex_id)
        except InputError:
            return SpsVerification(False, COND_INDUCED, f"{vertex_id!r} is not a product vertex")
        if len(coords) != len(e.indices):
            return SpsVerification(False, COND_INDUCED, f"{vertex_id} has {len(coords)} coordinates")
        for factor, index, c in zip(e.factors, e.indices, coords):
            if c != BOTTOM and c not in factor.vertices:
                return SpsVerification(False, COND_INDUCED, f"{vertex_id}: {c!r} is not a vertex of factor {index}")
        image_coords[vertex_id] = coords
    if e.image.edges != _image_edges(image_coords, e.factors):
        return SpsVerification(False, COND_INDUCED, "image edges differ from the pointed product's")

    for vertex_id in e.image.ordered_vertices:
        if not e.support(vertex_id):
            return SpsVerification(False, COND_SUPPORT, f"{vertex_id} has empty support")

    for vertex_id in e.image.ordered_vertices:
        region = reach(e.image, vertex_id)
        sub = induced_subgraph(e.image, region)
        for position, index in enumerate(e.indices):
            if image_coords[vertex_id][position] == BOTTOM:
                continue
            projection = {v: image_coords[v][position] for v in region}
            if BOTTOM in projection.values():
                return SpsVerification(False, COND_STRONG, f"projection {index} hits ⊥ inside reach({vertex_id})")
            if check_vertex_map(sub, e.factors[position], projection) != "strong":
                return SpsVerification(False, COND_STRONG, f"projection {index} is not strong on reach({vertex_id})")

    if set(e.isomorphism) != e.source.vertices:
        return SpsVerification(False, COND_ISOMORPHISM, "map is not total on the source")
    if set(e.isomorphism.values()) != e.image.vertices or len(e.image.vertices) != len(e.source.vertices):
        return SpsVerification(False, COND_ISOMORPHISM, "map is not a bijection onto the image")
    for a, image_id in e.isomorphism.items():
        if tuple(e.coordinates.get(a, ())) != image_coords[image_id]:
            return SpsVerification(False, COND_ISOMORPHISM, f"coordinates of {a} disagree with its image")
    if check_vertex_map(e.source, e.image, e.isomorphism) != "strong":
        return SpsVerification(False, COND_ISOMORPHISM, "map is not a strong homomorphism")
    return SpsVerification(True)
