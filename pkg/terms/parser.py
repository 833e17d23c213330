"""Text syntax for terms.

Identifiers are variables, ``inf`` is the constant ∞, application is
juxtaposition and associates to the left (``x y z`` is ``((x y) z)``),
parentheses group. Names that are not plain identifiers (or that read
``inf``) are written between backticks, e.g. ```0:a```.
"""
from dataclasses import dataclass
import re

from terms.term import Application, Infinity, INFINITY, Term, Variable
from utils.errors import InputError, TermSyntaxError

_PLAIN_NAME = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_']*")
_QUOTED_NAME = re.compile(r"`([^`]+)`")
INF_KEYWORD = "inf"

# token kinds
NAME, INF, LPAREN, RPAREN, APPROX, AND, ARROW, END = (
    "name", "inf", "(", ")", "≈", "&", "->", "end")

_SYMBOLS = [
    ("=~", APPROX), ("≈", APPROX),
    ("->", ARROW), ("→", ARROW),
    ("&", AND), ("∧", AND),
    ("(", LPAREN), (")", RPAREN),
]


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split text into tokens; the list always ends with an END token"""
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        for symbol, kind in _SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(Token(kind, symbol, i))
                i += len(symbol)
                break
        else:
            quoted = _QUOTED_NAME.match(text, i)
            if quoted:
                tokens.append(Token(NAME, quoted.group(1), i))
                i = quoted.end()
                continue
            plain = _PLAIN_NAME.match(text, i)
            if not plain:
                raise TermSyntaxError(f"unexpected character {text[i]!r}", text, i)
            word = plain.group(0)
            tokens.append(Token(INF if word == INF_KEYWORD else NAME, word, i))
            i = plain.end()
    tokens.append(Token(END, "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list with the recursive-descent term grammar"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != END:
            self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            found = token.value or "end of input"
            raise TermSyntaxError(f"expected {kind!r} but found {found!r}", self.text, token.position)
        return self.advance()

    def error(self, message: str) -> TermSyntaxError:
        return TermSyntaxError(message, self.text, self.peek().position)

    def term(self) -> Term:
        """term := atom atom*"""
        result = self.atom()
        while self.peek().kind in (NAME, INF, LPAREN):
            result = Application(result, self.atom())
        return result

    def atom(self) -> Term:
        token = self.peek()
        if token.kind == NAME:
            self.advance()
            return Variable(token.value)
        if token.kind == INF:
            self.advance()
            return INFINITY
        if token.kind == LPAREN:
            self.advance()
            inner = self.term()
            self.expect(RPAREN)
            return inner
        found = token.value or "end of input"
        raise self.error(f"expected a term but found {found!r}")


def parse_term(text: str) -> Term:
    """Parse a term; raises TermSyntaxError with the offending position"""
    stream = TokenStream(text)
    result = stream.term()
    if stream.peek().kind != END:
        raise stream.error(f"unexpected {stream.peek().value!r} after term")
    return result


def format_name(name: str) -> str:
    if _PLAIN_NAME.fullmatch(name) and name != INF_KEYWORD:
        return name
    if "`" in name or not name:
        raise InputError(f"variable name {name!r} cannot be written in term syntax")
    return f"`{name}`"


def format_term(t: Term) -> str:
    """Minimal-parenthesis rendering; parse_term(format_term(t)) == t"""
    if isinstance(t, Variable):
        return format_name(t.name)
    if isinstance(t, Infinity):
        return INF_KEYWORD
    right = format_term(t.right)
    if isinstance(t.right, Application):
        right = f"({right})"
    return f"{format_term(t.left)} {right}"
