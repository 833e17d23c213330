"""Identities and implications (quasi-identities) over terms"""
from dataclasses import dataclass
from typing import Iterable

from terms.parser import AND, APPROX, ARROW, END, TokenStream, format_term
from terms.term import INFINITY, Term, rename, variables


@dataclass(frozen=True)
class Identity:
    """t ≈ t'"""
    left: Term
    right: Term

    def variables(self) -> frozenset[str]:
        return variables(self.left) | variables(self.right)

    def __str__(self) -> str:
        return format_identity(self)


@dataclass(frozen=True)
class Implication:
    """premise → consequence.

    The premise is kept as a duplicate-free tuple so reports are stable;
    satisfaction only depends on it as a set.
    """
    premise: tuple[Identity, ...]
    consequence: Identity

    def __post_init__(self):
        object.__setattr__(self, "premise", tuple(dict.fromkeys(self.premise)))

    def variables(self) -> frozenset[str]:
        names = self.consequence.variables()
        for identity in self.premise:
            names |= identity.variables()
        return names

    def __str__(self) -> str:
        return format_implication(self)


TRIVIAL_IDENTITY = Identity(INFINITY, INFINITY)


def implication(premise: Iterable[Identity], consequence: Identity) -> Implication:
    return Implication(tuple(premise), consequence)


def identity_as_implication(identity: Identity) -> Implication:
    """∞ ≈ ∞ → identity, satisfied by exactly the graphs satisfying the identity"""
    return Implication((TRIVIAL_IDENTITY,), identity)


def rename_identity(identity: Identity, mapping: dict[str, str]) -> Identity:
    return Identity(rename(identity.left, mapping), rename(identity.right, mapping))


def rename_implication(imp: Implication, mapping: dict[str, str]) -> Implication:
    return Implication(
        tuple(rename_identity(i, mapping) for i in imp.premise),
        rename_identity(imp.consequence, mapping),
    )


def standard_renaming(names: Iterable[str]) -> dict[str, str]:
    """Sorted names onto x1, x2, ..."""
    return {name: f"x{i}" for i, name in enumerate(sorted(names), start=1)}


def rename_to_standard(imp: Implication) -> Implication:
    """An equivalent implication over the standard variables x1, x2, ..."""
    return rename_implication(imp, standard_renaming(imp.variables()))


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

def format_identity(identity: Identity, ascii_only: bool = False) -> str:
    symbol = "=~" if ascii_only else "≈"
    return f"{format_term(identity.left)} {symbol} {format_term(identity.right)}"


def format_implication(imp: Implication, ascii_only: bool = False) -> str:
    premise = " & ".join(format_identity(i, ascii_only) for i in imp.premise)
    consequence = format_identity(imp.consequence, ascii_only)
    return f"{premise} -> {consequence}" if premise else f"-> {consequence}"


def _identity(stream: TokenStream) -> Identity:
    left = stream.term()
    stream.expect(APPROX)
    return Identity(left, stream.term())


def parse_identity(text: str) -> Identity:
    """Parse ``<term> ≈ <term>`` (``=~`` also accepted)"""
    stream = TokenStream(text)
    result = _identity(stream)
    stream.expect(END)
    return result


def parse_implication(text: str) -> Implication:
    """Parse ``id & id & ... -> id``; an empty premise is written ``-> id``.

    A bare identity is read as the implication with premise {∞ ≈ ∞}.
    """
    stream = TokenStream(text)
    premise: list[Identity] = []
    if stream.peek().kind == ARROW:
        stream.advance()
        consequence = _identity(stream)
        stream.expect(END)
        return Implication((), consequence)
    premise.append(_identity(stream))
    while stream.peek().kind == AND:
        stream.advance()
        premise.append(_identity(stream))
    if stream.peek().kind == END and len(premise) == 1:
        return identity_as_implication(premise[0])
    stream.expect(ARROW)
    consequence = _identity(stream)
    stream.expect(END)
    return Implication(tuple(premise), consequence)
