"""Separating implications for non-members"""
from typing import Sequence

from graphs.graph import Graph, induced_subgraph
from graphs.reachability import reach
from logic.encodings import sigma
from logic.formulas import Identity, Implication
from logic.satisfaction import satisfies_implication
from quasivariety.membership import CONDITION_VERTEX, MembershipEvidence, membership
from terms.term import INFINITY, Variable
from utils.errors import ContractError, InternalError


def witness_implication(w: Graph, k: Sequence[Graph], evidence: MembershipEvidence | None = None,
                        force: bool = False) -> Implication:
    """An implication satisfied by every member of K but violated by W.

    With a the failing vertex (or the first vertex of the failing pair), the
    premise is Σ(reach(a)) and the consequence is x_a ≈ ∞ for a condition (a)
    failure, x_a ≈ x_a' for a condition (b) failure. Both directions are
    re-checked before returning.

    Raises:
        ContractError: W is a member
        InternalError: the implication does not separate (never expected)
    """
    k = list(k)
    if evidence is None:
        evidence = membership(w, k)
    if evidence.verdict or evidence.failure is None:
        raise ContractError("W belongs to the quasivariety; there is no separating implication")

    failure = evidence.failure
    base = failure.vertices[0]
    region = evidence.reaches.get(base) or reach(w, base)
    subgraph = induced_subgraph(w, region)
    if failure.condition == CONDITION_VERTEX:
        consequence = Identity(Variable(base), INFINITY)
    else:
        consequence = Identity(Variable(base), Variable(failure.vertices[1]))
    imp = Implication(sigma(subgraph), consequence)

    for index, g in enumerate(k):
        if not satisfies_implication(g, imp, force):
            raise InternalError(f"witness implication fails on member {index} of K")
    if satisfies_implication(w, imp, force):
        raise InternalError("witness implication holds on W")
    return imp
