"""Rooted trees T_φ over a source transversal and the gluings G_φ.

For a transversal S of the source components of G and φ: S -> ℕ, T_φ has a
root r and, for each a with φ(a) > 0, a directed path of length φ(a) from r
to a. G_φ is G ∪ T_φ with r and every a with φ(a) = 0 identified; every
vertex of G_φ is reachable from r.
"""
from dataclasses import dataclass
from typing import Mapping, Sequence

from graphs.graph import Graph
from graphs.reachability import is_valid_transversal, transversal
from utils.errors import InputError

ROOT = "__r"
INTERIOR_PREFIX = "__p_"


@dataclass(frozen=True)
class PhiAssignment:
    """φ: S -> ℕ, total on the transversal it was built for"""
    values: Mapping[str, int]

    def __post_init__(self):
        for a, n in self.values.items():
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise InputError(f"φ({a}) must be a natural number, got {n!r}")

    @classmethod
    def of(cls, values: Mapping) -> "PhiAssignment":
        return cls({str(a): n for a, n in values.items()})

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(sorted(self.values))

    def zero(self) -> tuple[str, ...]:
        """S⁰: the vertices glued to the root"""
        return tuple(a for a in self.domain if self.values[a] == 0)

    def positive(self) -> tuple[str, ...]:
        """S⁺: the vertices reached by a path of positive length"""
        return tuple(a for a in self.domain if self.values[a] > 0)

    def __getitem__(self, a: str) -> int:
        return self.values[a]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}: {self.values[a]}" for a in self.domain) + "}"


def interior_vertex(a: str, j: int) -> str:
    """The j-th interior vertex on the path from the root to a"""
    return f"{INTERIOR_PREFIX}{a}_{j}"


def check_reserved(g: Graph) -> None:
    for v in g.vertices:
        if v == ROOT or v.startswith(INTERIOR_PREFIX):
            raise InputError(f"vertex name {v!r} collides with the reserved tree namespace")


def source_transversal_valid(g: Graph, s: Sequence[str]) -> bool:
    """True iff s picks exactly one vertex of every source component of g"""
    return all(a in g.vertices for a in s) and is_valid_transversal(g, list(s))


def _phi_domain(s: Sequence[str], phi: PhiAssignment) -> None:
    if set(phi.values) != set(s):
        raise InputError(f"φ must be defined exactly on S = {sorted(s)}")


def build_T_phi(s: Sequence[str], phi: PhiAssignment) -> tuple[Graph, str]:
    """T_φ and its root"""
    s = [str(a) for a in s]
    _phi_domain(s, phi)
    for a in s:
        if a == ROOT or a.startswith(INTERIOR_PREFIX):
            raise InputError(f"vertex name {a!r} collides with the reserved tree namespace")

    vertices = {ROOT}
    edges = set()
    for a in phi.positive():
        path = [ROOT] + [interior_vertex(a, j) for j in range(1, phi[a])] + [a]
        vertices.update(path)
        edges.update(zip(path, path[1:]))
    return Graph(frozenset(vertices), frozenset(edges)), ROOT


def glue_with_tree(g: Graph, s: Sequence[str], phi: PhiAssignment) -> Graph:
    """G ∪ T_φ, glued at S⁺"""
    tree, _ = build_T_phi(s, phi)
    return Graph(g.vertices | tree.vertices, g.edges | tree.edges)


def build_G_phi(g: Graph, s: Sequence[str] | None, phi: PhiAssignment) -> tuple[Graph, str]:
    """G_φ and its root.

    Edges at a glued vertex a ∈ S⁰ are carried over to the root, loops and
    edges between glued vertices included.

    Raises:
        InputError: s is not a source transversal of g, or g uses reserved names
    """
    s = transversal(g) if s is None else [str(a) for a in s]
    check_reserved(g)
    if not source_transversal_valid(g, s):
        raise InputError(f"{sorted(s)} is not a source transversal of the graph")

    union = glue_with_tree(g, s, phi)
    glued = set(phi.zero())

    def image(v: str) -> str:
        return ROOT if v in glued else v

    vertices = frozenset(image(v) for v in union.vertices)
    edges = frozenset((image(u), image(v)) for u, v in union.edges)
    return Graph(vertices, edges), ROOT
