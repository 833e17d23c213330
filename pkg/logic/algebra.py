"""The graph algebra ⟨V ∪ {∞}; ·, ∞⟩ of a graph and term evaluation in it"""
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union
import itertools

from graphs.graph import Graph
from terms.term import Application, Infinity, Term, Variable
from utils.errors import InputError


class Absorbing(Enum):
    INF = "inf"

    def __repr__(self) -> str:
        return "∞"

    def __str__(self) -> str:
        return "∞"


INF = Absorbing.INF

Value = Union[str, Absorbing]
Assignment = Mapping[str, Value]


def _check_value(g: Graph, value: Value) -> None:
    if value is not INF and value not in g.vertices:
        raise InputError(f"{value!r} is neither a vertex of the graph nor ∞")


def mult(g: Graph, u: Value, v: Value) -> Value:
    """u · v = u if (u, v) is an edge, ∞ otherwise"""
    _check_value(g, u)
    _check_value(g, v)
    if u is not INF and v is not INF and g.has_edge(u, v):
        return u
    return INF


def evaluate(g: Graph, t: Term, h: Assignment) -> Value:
    """The value h(t) of a term under an assignment"""
    if isinstance(t, Variable):
        if t.name not in h:
            raise InputError(f"assignment has no value for variable {t.name!r}")
        value = h[t.name]
        _check_value(g, value)
        return value
    if isinstance(t, Infinity):
        return INF
    left = evaluate(g, t.left, h)
    if left is INF:
        # still validate the right side's bindings
        evaluate(g, t.right, h)
        return INF
    right = evaluate(g, t.right, h)
    return left if right is not INF and g.has_edge(left, right) else INF


def value_order(g: Graph) -> tuple[Value, ...]:
    """Values in enumeration order: ∞ first, then vertices ascending"""
    return (INF,) + g.ordered_vertices


def assignments(names: Iterable[str], g: Graph) -> Iterator[dict[str, Value]]:
    """All assignments of the given variables, in the canonical order.

    Variables are sorted by name; the first one varies slowest.
    """
    ordered = sorted(set(names))
    for values in itertools.product(value_order(g), repeat=len(ordered)):
        yield dict(zip(ordered, values))


def format_value(value: Value) -> str:
    return "inf" if value is INF else value


def format_assignment(h: Assignment) -> str:
    return ", ".join(f"{name} ↦ {format_value(h[name])}" for name in sorted(h))
