"""Identity encodings of a graph: Γ_e, Γ_n and Σ = Γ_e ∪ Γ_n.

Vertices double as variable names, so x_a is simply the variable ``a``.
"""
from graphs.graph import Graph
from logic.formulas import Identity
from terms.term import INFINITY, Application, Variable


def _product(a: str, b: str) -> Application:
    return Application(Variable(a), Variable(b))


def gamma_e(g: Graph) -> tuple[Identity, ...]:
    """x_a x_b ≈ x_a for every edge (a, b)"""
    return tuple(Identity(_product(a, b), Variable(a)) for a, b in sorted(g.edges))


def gamma_n(g: Graph) -> tuple[Identity, ...]:
    """x_a x_b ≈ ∞ for every non-edge (a, b)"""
    return tuple(
        Identity(_product(a, b), INFINITY)
        for a in g.ordered_vertices for b in g.ordered_vertices
        if not g.has_edge(a, b)
    )


def sigma(g: Graph) -> tuple[Identity, ...]:
    """Σ(G), one identity per ordered vertex pair, pairs in ascending order"""
    return tuple(
        Identity(_product(a, b), Variable(a) if g.has_edge(a, b) else INFINITY)
        for a in g.ordered_vertices for b in g.ordered_vertices
    )
