"""Satisfaction of identities and implications in graph algebras"""
from dataclasses import dataclass
from typing import Iterable

from data.limits import MAX_FORMULA_VARIABLES, MAX_GRAPH_VERTICES
from graphs.graph import Graph
from graphs.homomorphisms import enumerate_homomorphisms
from logic.algebra import INF, Value, assignments, evaluate, value_order
from logic.formulas import Identity, Implication, identity_as_implication
from terms.term import Application, Term, Variable, is_trivial, leftmost, variables
from terms.term_graph import term_graph
from utils.errors import CapacityError, InputError

BRUTE = "brute"
FAST = "fast"


@dataclass(frozen=True)
class SatisfactionResult:
    """Verdict of a satisfaction check; countermodel set iff it failed"""
    holds: bool
    countermodel: dict[str, Value] | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_capacity(variable_count: int, g: Graph, force: bool = False) -> None:
    """Reject formulas with too many variables over too large graphs"""
    if force:
        return
    if variable_count > MAX_FORMULA_VARIABLES and len(g.vertices) > MAX_GRAPH_VERTICES:
        raise CapacityError(
            f"{variable_count} variables over {len(g.vertices)} vertices exceeds the limits "
            f"({MAX_FORMULA_VARIABLES} variables / {MAX_GRAPH_VERTICES} vertices); use force"
        )


def _value(g: Graph, t: Term, h: dict[str, Value]) -> Value:
    # unchecked evaluation; callers only bind vertices of g or INF
    if isinstance(t, Variable):
        return h[t.name]
    if isinstance(t, Application):
        left = _value(g, t.left, h)
        if left is INF:
            return INF
        right = _value(g, t.right, h)
        return left if right is not INF and (left, right) in g.edges else INF
    return INF


def _holds(g: Graph, identity: Identity, h: dict[str, Value]) -> bool:
    return _value(g, identity.left, h) == _value(g, identity.right, h)


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

def _satisfies_brute(g: Graph, identity: Identity) -> bool:
    for h in assignments(identity.variables(), g):
        if evaluate(g, identity.left, h) != evaluate(g, identity.right, h):
            return False
    return True


def _hom_set(g: Graph, t: Term) -> frozenset[tuple[tuple[str, str], ...]]:
    graph, _ = term_graph(t)
    return frozenset(tuple(sorted(m.images.items())) for m in enumerate_homomorphisms(graph, g))


def _satisfies_fast(g: Graph, identity: Identity) -> bool:
    t, u = identity.left, identity.right
    if is_trivial(t) and is_trivial(u):
        return True
    if is_trivial(t) or is_trivial(u):
        other = u if is_trivial(t) else t
        graph, _ = term_graph(other)
        return next(enumerate_homomorphisms(graph, g), None) is None
    homs_t, homs_u = _hom_set(g, t), _hom_set(g, u)
    if variables(t) != variables(u):
        # maps with different domains never coincide
        return not homs_t and not homs_u
    if homs_t != homs_u:
        return False
    left_t, left_u = leftmost(t), leftmost(u)
    return all(dict(m)[left_t] == dict(m)[left_u] for m in homs_t)


def satisfies_identity(g: Graph, identity: Identity, mode: str = FAST, force: bool = False) -> bool:
    """Decide G ⊨ t ≈ t'.

    Args:
        g: The graph
        identity: The identity
        mode: ``"brute"`` enumerates every assignment; ``"fast"`` compares the
            homomorphism sets of the two term graphs and their leftmost values
        force: Skip the capacity guardrail (brute mode)

    Returns:
        True iff every assignment gives both sides the same value
    """
    if mode == BRUTE:
        check_capacity(len(identity.variables()), g, force)
        return _satisfies_brute(g, identity)
    if mode == FAST:
        return _satisfies_fast(g, identity)
    raise InputError(f"unknown mode {mode!r}; expected 'brute' or 'fast'")


def check_identity(g: Graph, identity: Identity, mode: str = FAST, force: bool = False) -> SatisfactionResult:
    """satisfies_identity plus the first violating assignment on failure"""
    if satisfies_identity(g, identity, mode, force):
        return SatisfactionResult(True)
    return satisfies_implication(g, identity_as_implication(identity), force=True)


# ---------------------------------------------------------------------------
# Implications
# ---------------------------------------------------------------------------

def satisfies_implication(g: Graph, imp: Implication, force: bool = False) -> SatisfactionResult:
    """Decide G ⊨ α → β over the variables occurring in the implication.

    Backtracks over the variables in name order with values ∞ first, then
    vertices ascending, checking each premise identity as soon as all of its
    variables are bound. The countermodel is therefore the first violating
    assignment of the plain enumeration order.
    """
    names = sorted(imp.variables())
    check_capacity(len(names), g, force)
    position = {name: i for i, name in enumerate(names)}

    # premise identities indexed by the position of their last variable
    triggered: list[list[Identity]] = [[] for _ in names]
    for identity in imp.premise:
        identity_vars = identity.variables()
        if not identity_vars:
            if not _holds(g, identity, {}):
                return SatisfactionResult(True)
            continue
        triggered[max(position[v] for v in identity_vars)].append(identity)

    values = value_order(g)
    h: dict[str, Value] = {}

    def search(i: int) -> dict[str, Value] | None:
        if i == len(names):
            return None if _holds(g, imp.consequence, h) else dict(h)
        name = names[i]
        for value in values:
            h[name] = value
            if all(_holds(g, identity, h) for identity in triggered[i]):
                found = search(i + 1)
                if found is not None:
                    return found
        del h[name]
        return None

    countermodel = search(0)
    if countermodel is None:
        return SatisfactionResult(True)
    return SatisfactionResult(False, countermodel)


def satisfies_implication_brute(g: Graph, imp: Implication) -> SatisfactionResult:
    """Reference check by plain enumeration of every assignment"""
    for h in assignments(imp.variables(), g):
        if all(evaluate(g, i.left, h) == evaluate(g, i.right, h) for i in imp.premise):
            if evaluate(g, imp.consequence.left, h) != evaluate(g, imp.consequence.right, h):
                return SatisfactionResult(False, h)
    return SatisfactionResult(True)


def first_violated(g: Graph, imps: Iterable[Implication], force: bool = False) -> tuple[int, SatisfactionResult] | None:
    """Index and result of the first implication g violates, or None"""
    for index, imp in enumerate(imps):
        result = satisfies_implication(g, imp, force)
        if not result:
            return index, result
    return None
