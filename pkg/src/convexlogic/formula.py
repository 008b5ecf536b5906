"""Intuitionistic propositional formulas: AST, parser, printer, evaluation.

Surface syntax (ASCII, shell friendly)::

    formula := implies
    implies := or ("->" implies)?
    or      := and ("|" and)*
    and     := not ("&" not)*
    not     := "~" not | atom
    atom    := IDENT | "true" | "false" | "(" formula ")"

Negation is sugar: ``~p`` parses to ``Implies(Atom("p"), Bot())``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Mapping, Protocol, Union

__all__ = [
    "Atom", "Top", "Bot", "And", "Or", "Implies", "Formula", "TOP", "BOT",
    "Not", "ParseError", "UnboundAtomError", "HeytingAlgebra",
    "parse", "to_text", "atoms", "evaluate", "bd_formula",
]


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not _IDENT.fullmatch(self.name) or self.name in _KEYWORDS:
            raise ValueError(f"invalid atom name {self.name!r}")

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "true"


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return "false"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


Formula = Union[Atom, Top, Bot, And, Or, Implies]

TOP = Top()
BOT = Bot()


def Not(phi: Formula) -> Implies:
    return Implies(phi, BOT)


# ---------------------------------------------------------------------------
# parsing

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_KEYWORDS = {"true", "false"}
_TOKEN = re.compile(r"\s*(?:(->)|([~&|()])|([A-Za-z_][A-Za-z0-9_]*))")


class ParseError(ValueError):
    """Syntax error; carries the offending position and the tokens that would fit."""

    def __init__(self, text: str, position: int, expected: set[str]):
        self.text = text
        self.position = position
        self.expected = frozenset(expected)
        shown = ", ".join(sorted(self.expected))
        found = text[position:position + 10] or "end of input"
        super().__init__(f"at position {position}: expected one of {{{shown}}}, found {found!r}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(text, pos, {"IDENT", "true", "false", "~", "(", "&", "|", "->", ")"})
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("->", "->", start))
        elif m.group(2):
            tokens.append((m.group(2), m.group(2), start))
        else:
            word = m.group(3)
            kind = word if word in _KEYWORDS else "IDENT"
            tokens.append((kind, word, start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def fail(self, expected):
        raise ParseError(self.text, self.tokens[self.i][2], set(expected))

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.kind == "->":
            self.advance()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.kind == "|":
            self.advance()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.negation()
        while self.kind == "&":
            self.advance()
            node = And(node, self.negation())
        return node

    def negation(self) -> Formula:
        if self.kind == "~":
            self.advance()
            return Not(self.negation())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.tokens[self.i]
        if kind == "IDENT":
            self.advance()
            return Atom(value)
        if kind == "true":
            self.advance()
            return TOP
        if kind == "false":
            self.advance()
            return BOT
        if kind == "(":
            self.advance()
            inner = self.formula()
            if self.kind != ")":
                self.fail({")", "&", "|", "->"})
            self.advance()
            return inner
        self.fail({"IDENT", "true", "false", "~", "("})


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula; raises :class:`ParseError`."""
    p = _Parser(text)
    phi = p.formula()
    if p.kind != "EOF":
        p.fail({"&", "|", "->", "EOF"})
    return phi


# ---------------------------------------------------------------------------
# printing

# binding strength: higher binds tighter
_PREC = {Implies: 1, Or: 2, And: 3}


def _is_negation(phi) -> bool:
    return isinstance(phi, Implies) and isinstance(phi.right, Bot)


def _prec(phi) -> int:
    if _is_negation(phi):
        return 4
    return _PREC.get(type(phi), 5)


def to_text(phi: Formula) -> str:
    """Render with the fewest parentheses that still re-parse to ``phi``."""
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bot):
        return "false"
    if _is_negation(phi):
        inner = phi.left
        body = to_text(inner)
        return "~" + (body if _prec(inner) >= 4 else f"({body})")
    if isinstance(phi, Implies):
        # right associative
        left = to_text(phi.left)
        if _prec(phi.left) <= 1:
            left = f"({left})"
        right = to_text(phi.right)
        if _prec(phi.right) < 1:
            right = f"({right})"
        return f"{left} -> {right}"
    op = " & " if isinstance(phi, And) else " | "
    mine = _prec(phi)
    # left associative
    left = to_text(phi.left)
    if _prec(phi.left) < mine:
        left = f"({left})"
    right = to_text(phi.right)
    if _prec(phi.right) <= mine:
        right = f"({right})"
    return left + op + right


def atoms(phi: Formula) -> list[str]:
    """Atom names of ``phi`` in sorted order."""
    found: set[str] = set()

    def walk(node):
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, (And, Or, Implies)):
            walk(node.left)
            walk(node.right)

    walk(phi)
    return sorted(found)


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, (And, Or, Implies)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)


# ---------------------------------------------------------------------------
# evaluation

class HeytingAlgebra(Protocol):
    top: Any
    bottom: Any

    def meet(self, a, b): ...
    def join(self, a, b): ...
    def implies(self, a, b): ...


class UnboundAtomError(KeyError):
    pass


def evaluate(phi: Formula, algebra: HeytingAlgebra, valuation: Mapping[str, Any]):
    """Evaluate ``phi`` bottom-up in ``algebra`` under ``valuation``."""
    cache: dict[Formula, Any] = {}

    def ev(node):
        hit = cache.get(node)
        if hit is not None:
            return hit
        if isinstance(node, Atom):
            try:
                val = valuation[node.name]
            except KeyError:
                raise UnboundAtomError(node.name) from None
        elif isinstance(node, Top):
            val = algebra.top
        elif isinstance(node, Bot):
            val = algebra.bottom
        else:
            op: Callable = {And: algebra.meet, Or: algebra.join, Implies: algebra.implies}[type(node)]
            val = op(ev(node.left), ev(node.right))
        cache[node] = val
        return val

    return ev(phi)


def bd_formula(k: int) -> Formula:
    """Bounded-depth schema: bd_1 = p1 | ~p1, bd_{k+1} = p_{k+1} | (p_{k+1} -> bd_k).

    ``bd_k`` is valid on a finite frame exactly when every chain has at most
    ``k`` points, i.e. height <= k - 1.
    """
    if k < 1:
        raise ValueError("bd schema starts at k = 1")
    p = Atom("p1")
    phi: Formula = Or(p, Not(p))
    for i in range(2, k + 1):
        p = Atom(f"p{i}")
        phi = Or(p, Implies(p, phi))
    return phi
