"""Implication sets axiomatizing classes of G-free graphs.

A graph H is G-free when no induced subgraph of H that is a term graph
admits a strong homomorphism from G. For finite G, H is G-free iff it
satisfies every implication of Ξ_G.
"""
from typing import Sequence
import itertools

from data.limits import MAX_XI_FAMILY_SIZE
from forbidden.gluing import PhiAssignment, build_T_phi, check_reserved, source_transversal_valid
from graphs.families import odd_antihole, odd_hole
from graphs.graph import Graph
from graphs.reachability import transversal
from logic.encodings import gamma_e, sigma
from logic.formulas import Identity, Implication, identity_as_implication
from terms.term import INFINITY, Application, Term, Variable
from terms.term_graph import graph_to_term, is_term_graph, term_graph
from utils.errors import CapacityError, InputError

# Variable names of the standard perfect-graph identities
_X0, _X1 = Variable("x0"), Variable("x1")


def xi_implication(g: Graph, phi: PhiAssignment, s: Sequence[str] | None = None) -> Implication:
    """α_φ → x_r ≈ ∞ with α_φ = Σ(G) ∪ Γ_e(T_φ) ∪ {x_a ≈ x_r : φ(a) = 0}.

    Variables are the vertices of G ∪ T_φ, the root being ``__r``.
    """
    s = transversal(g) if s is None else [str(a) for a in s]
    check_reserved(g)
    if not source_transversal_valid(g, s):
        raise InputError(f"{sorted(s)} is not a source transversal of the graph")
    tree, root = build_T_phi(s, phi)
    premise = sigma(g) + gamma_e(tree) + tuple(
        Identity(Variable(a), Variable(root)) for a in phi.zero()
    )
    return Implication(premise, Identity(Variable(root), INFINITY))


def phi_assignments(s: Sequence[str], bound: int) -> list[PhiAssignment]:
    """Every φ ∈ {0..bound}^S, lexicographic in the sorted order of S"""
    names = sorted(s)
    return [
        PhiAssignment(dict(zip(names, values)))
        for values in itertools.product(range(bound + 1), repeat=len(names))
    ]


def xi_family(g: Graph, bound: int, force: bool = False) -> list[Implication]:
    """Ξ_G truncated to φ values at most ``bound``.

    Raises:
        CapacityError: (bound + 1)^|S| exceeds the configured family size
    """
    if bound < 0:
        raise InputError(f"bound must be a natural number, got {bound}")
    s = transversal(g)
    count = (bound + 1) ** len(s)
    if count > MAX_XI_FAMILY_SIZE and not force:
        raise CapacityError(
            f"Ξ family of {count} implications exceeds the limit of {MAX_XI_FAMILY_SIZE}; use force")
    return [xi_implication(g, phi, s) for phi in phi_assignments(s, bound)]


def host_bound(h: Graph) -> int:
    """Largest φ value needed to check a finite host graph against Ξ_G"""
    return max(0, len(h.vertices) - 1)


def term_graph_implication(t: Term) -> Implication:
    """Σ(G(t)) → L(t) ≈ ∞, violated by H iff G(t) maps strongly into H"""
    graph, root = term_graph(t)
    return Implication(sigma(graph), Identity(Variable(root), INFINITY))


def graph_implication(g: Graph) -> Implication:
    """I_G for a term graph g, through the term read off from its least root"""
    root = is_term_graph(g)
    if root is None:
        raise InputError("the graph is not a term graph")
    return term_graph_implication(graph_to_term(g, root))


def perfect_graph_axioms(k_max: int) -> list[Implication]:
    """Looplessness, symmetry and I_G for the odd holes and antiholes up to 2·k_max + 1"""
    if k_max < 2:
        raise InputError(f"k_max must be at least 2, got {k_max}")
    axioms = [
        identity_as_implication(Identity(Application(_X0, _X0), INFINITY)),
        identity_as_implication(Identity(Application(_X0, Application(_X1, _X0)), Application(_X0, _X1))),
    ]
    for k in range(2, k_max + 1):
        axioms.append(graph_implication(odd_hole(k)))
        axioms.append(graph_implication(odd_antihole(k)))
    return axioms

