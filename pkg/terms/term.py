"""Terms of type (2,0): variables, the constant ∞, and binary application"""
from dataclasses import dataclass
from functools import reduce
from typing import Union

from utils.errors import InputError


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        from terms.parser import format_term
        return format_term(self)


@dataclass(frozen=True)
class Infinity:
    def __str__(self) -> str:
        return "inf"


@dataclass(frozen=True)
class Application:
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        from terms.parser import format_term
        return format_term(self)


Term = Union[Variable, Infinity, Application]

INFINITY = Infinity()


def apply(*terms: Term) -> Term:
    """Left-associated application: apply(x, y, z) = ((x y) z)"""
    if not terms:
        raise InputError("apply needs at least one term")
    return reduce(Application, terms)


def variables(t: Term) -> frozenset[str]:
    """var(t)"""
    if isinstance(t, Variable):
        return frozenset({t.name})
    if isinstance(t, Application):
        return variables(t.left) | variables(t.right)
    return frozenset()


def is_trivial(t: Term) -> bool:
    """A term is trivial iff ∞ occurs in it"""
    if isinstance(t, Infinity):
        return True
    if isinstance(t, Application):
        return is_trivial(t.left) or is_trivial(t.right)
    return False


def leftmost(t: Term) -> str:
    """L(t), the leftmost variable of a nontrivial term"""
    if is_trivial(t):
        raise InputError(f"trivial term {t} has no leftmost variable")
    while isinstance(t, Application):
        t = t.left
    return t.name


def depth(t: Term) -> int:
    """Leaves have depth 1"""
    if isinstance(t, Application):
        return 1 + max(depth(t.left), depth(t.right))
    return 1


def size(t: Term) -> int:
    """Number of leaves"""
    if isinstance(t, Application):
        return size(t.left) + size(t.right)
    return 1


def rename(t: Term, mapping: dict[str, str]) -> Term:
    """Substitute variable names; names missing from mapping are kept"""
    if isinstance(t, Variable):
        return Variable(mapping.get(t.name, t.name))
    if isinstance(t, Application):
        return Application(rename(t.left, mapping), rename(t.right, mapping))
    return t
