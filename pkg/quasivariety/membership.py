"""Membership of a finite graph W in the quasivariety generated by a finite class K.

W belongs iff
  (a) every vertex a has a strong homomorphism reach(a) -> G for some G in K, and
  (b) every pair a != a' with reach(a) = reach(a') has such a homomorphism
      separating a and a'.
"""
from dataclasses import dataclass, field
from typing import Sequence
import itertools

from data.limits import MAX_HEREDITARY_VERTICES
from graphs.graph import Graph, VertexMap, induced_subgraph
from graphs.homomorphisms import enumerate_homomorphisms
from graphs.reachability import reach
from utils.errors import CapacityError

CONDITION_VERTEX = "a"
CONDITION_PAIR = "b"

# Non-separating maps recorded for a failed pair
MAX_REPORTED_CANDIDATES = 16


@dataclass(frozen=True)
class SiteMap:
    """A strong homomorphism reach(base) -> K[factor]"""
    factor: int
    map: VertexMap


@dataclass(frozen=True)
class FailureSite:
    """The least vertex (condition a) or least pair (condition b) that fails.

    For a pair failure, ``candidates`` lists the strong homomorphisms that
    exist but do not separate the pair.
    """
    condition: str
    vertices: tuple[str, ...]
    candidates: tuple[SiteMap, ...] = ()

    def describe(self) -> str:
        if self.condition == CONDITION_VERTEX:
            return f"condition (a) fails at vertex {self.vertices[0]}"
        return f"condition (b) fails at pair {{{', '.join(self.vertices)}}}"


@dataclass(frozen=True)
class MembershipEvidence:
    verdict: bool
    vertex_maps: dict[str, SiteMap] = field(default_factory=dict)
    pair_maps: dict[tuple[str, str], SiteMap] = field(default_factory=dict)
    failure: FailureSite | None = None
    reaches: dict[str, frozenset[str]] = field(default_factory=dict, repr=False)

    def __bool__(self) -> bool:
        return self.verdict


class _ReachSubgraphs:
    """reach(a) and the subgraph it induces, computed once per vertex"""

    def __init__(self, w: Graph):
        self.w = w
        self.reaches = {a: reach(w, a) for a in w.ordered_vertices}
        self._subgraphs: dict[frozenset[str], Graph] = {}

    def subgraph(self, a: str) -> Graph:
        vertices = self.reaches[a]
        if vertices not in self._subgraphs:
            self._subgraphs[vertices] = induced_subgraph(self.w, vertices)
        return self._subgraphs[vertices]


def _first_strong(domain: Graph, k: Sequence[Graph], distinct: tuple[str, str] | None = None) -> SiteMap | None:
    for index, target in enumerate(k):
        found = next(enumerate_homomorphisms(domain, target, strong=True, distinct=distinct), None)
        if found is not None:
            return SiteMap(index, found)
    return None


def _all_strong(domain: Graph, k: Sequence[Graph], limit: int) -> tuple[SiteMap, ...]:
    found: list[SiteMap] = []
    for index, target in enumerate(k):
        for m in enumerate_homomorphisms(domain, target, strong=True):
            found.append(SiteMap(index, m))
            if len(found) >= limit:
                return tuple(found)
    return tuple(found)


def membership(w: Graph, k: Sequence[Graph]) -> MembershipEvidence:
    """Decide W ∈ Mod qId K for finite W and K.

    Args:
        w: The candidate graph
        k: The generating class, in the order searched

    Returns:
        MembershipEvidence; on success every vertex and every equal-reach pair
        carries its strong homomorphism (first K member, first map found), on
        failure the least failing vertex or pair is recorded
    """
    k = list(k)
    parts = _ReachSubgraphs(w)
    vertex_maps: dict[str, SiteMap] = {}
    by_reach: dict[frozenset[str], SiteMap] = {}

    for a in w.ordered_vertices:
        key = parts.reaches[a]
        if key not in by_reach:
            found = _first_strong(parts.subgraph(a), k)
            if found is None:
                return MembershipEvidence(
                    False, vertex_maps, {}, FailureSite(CONDITION_VERTEX, (a,)), parts.reaches)
            by_reach[key] = found
        vertex_maps[a] = by_reach[key]

    pair_maps: dict[tuple[str, str], SiteMap] = {}
    for a, b in itertools.combinations(w.ordered_vertices, 2):
        if parts.reaches[a] != parts.reaches[b]:
            continue
        domain = parts.subgraph(a)
        found = _first_strong(domain, k, distinct=(a, b))
        if found is None:
            candidates = _all_strong(domain, k, MAX_REPORTED_CANDIDATES)
            return MembershipEvidence(
                False, vertex_maps, pair_maps, FailureSite(CONDITION_PAIR, (a, b), candidates), parts.reaches)
        pair_maps[(a, b)] = found

    return MembershipEvidence(True, vertex_maps, pair_maps, None, parts.reaches)


def membership_hereditary_check(w: Graph, k: Sequence[Graph], force: bool = False) -> bool:
    """True iff every induced subgraph of W passes membership"""
    if len(w.vertices) > MAX_HEREDITARY_VERTICES and not force:
        raise CapacityError(
            f"hereditary check over {len(w.vertices)} vertices exceeds the limit of "
            f"{MAX_HEREDITARY_VERTICES}; use force")
    vertices = w.ordered_vertices
    for size in range(len(vertices), -1, -1):
        for subset in itertools.combinations(vertices, size):
            if not membership(induced_subgraph(w, subset), k).verdict:
                return False
    return True
