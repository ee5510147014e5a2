# betarec/logic/parser.py
"""
Recursive-descent parser for formula text.

    formula     := implication
    implication := disjunction ('->' implication)?
    disjunction := conjunction ('|' conjunction)*
    conjunction := unary ('&' unary)*
    unary       := '!' unary | ('E' | 'A') var '.' formula | '(' formula ')' | atom
    atom        := term ('=' | '<=' | '<' | '>=' | '>') term | 'X[' int '](' var ',' var ')'
    term        := summand ('+' summand)*
    summand     := var | natural

Quantifier bodies extend as far right as possible. Variables are lowercase
identifiers; E, A and X are reserved.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass

from ..algebraic.base import BaseProfile
from ..errors import AlphabetError, FormulaSyntaxError, UnboundVariableError
from ..realsets.linear import Relation
from .ast import And, DigitAt, Exists, Forall, Formula, Implies, Linear, Not, Or, walk

_TOKEN = re.compile(
    r"\s*(?:(?P<num>-?\d+)|(?P<var>[a-z_][a-z0-9_]*)|(?P<kw>[EAX])"
    r"|(?P<op>->|<=|>=|[=<>+|&!().,\[\]]))"
)

_RELATIONS = {"=": Relation.EQ, "<": Relation.LT, "<=": Relation.LEQ, ">": Relation.GT, ">=": Relation.GEQ}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def accept(self, text: str) -> bool:
        if self.current.text == text and self.current.kind in ("op", "kw"):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.current
        if not self.accept(text):
            found = tok.text or "end of input"
            raise FormulaSyntaxError(f"expected {text!r}, found {found!r}", tok.position)
        return tok

    def variable(self) -> str:
        tok = self.current
        if tok.kind != "var":
            raise FormulaSyntaxError(f"expected a variable, found {tok.text or 'end of input'!r}", tok.position)
        self.i += 1
        return tok.text

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        acc = self.conjunction()
        while self.accept("|"):
            acc = Or(acc, self.conjunction())
        return acc

    def conjunction(self) -> Formula:
        acc = self.unary()
        while self.accept("&"):
            acc = And(acc, self.unary())
        return acc

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        for quantifier, node in (("E", Exists), ("A", Forall)):
            if self.accept(quantifier):
                var = self.variable()
                self.expect(".")
                return node(var, self.formula())
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        if self.accept("X"):
            return self.digit_atom()
        return self.comparison()

    def digit_atom(self) -> DigitAt:
        self.expect("[")
        tok = self.current
        if tok.kind != "num":
            raise FormulaSyntaxError("expected a digit", tok.position)
        self.i += 1
        self.expect("]")
        self.expect("(")
        x = self.variable()
        self.expect(",")
        y = self.variable()
        self.expect(")")
        return DigitAt(int(tok.text), x, y)

    def term(self) -> tuple[list[tuple[str, int]], int]:
        terms: list[tuple[str, int]] = []
        const = 0
        while True:
            tok = self.current
            if tok.kind == "var":
                terms.append((tok.text, 1))
            elif tok.kind == "num" and not tok.text.startswith("-"):
                const += int(tok.text)
            else:
                raise FormulaSyntaxError(f"expected a term, found {tok.text or 'end of input'!r}", tok.position)
            self.i += 1
            if not self.accept("+"):
                return terms, const

    def comparison(self) -> Linear:
        left, lc = self.term()
        tok = self.current
        rel = _RELATIONS.get(tok.text) if tok.kind == "op" else None
        if rel is None:
            raise FormulaSyntaxError(f"expected a comparison, found {tok.text or 'end of input'!r}", tok.position)
        self.i += 1
        right, rc = self.term()
        return Linear.of(left + [(v, -c) for v, c in right], lc - rc, rel)


def parse_formula(
    text: str,
    base: BaseProfile | None = None,
    free: Iterable[str] | None = None,
) -> Formula:
    """
    Parse formula text.

    Args:
        text: Formula in the grammar above
        base: When given, every X[a] digit must be a signed digit of the base
        free: When given, the only variables allowed to occur free

    Raises:
        FormulaSyntaxError: text does not parse
        AlphabetError: unknown digit for the base
        UnboundVariableError: a free variable outside `free`
    """
    parser = _Parser(text)
    phi = parser.formula()
    tail = parser.current
    if tail.kind != "end":
        raise FormulaSyntaxError(f"unexpected {tail.text!r}", tail.position)
    if base is not None:
        for node in walk(phi):
            if isinstance(node, DigitAt) and node.digit not in base.signed_alphabet:
                raise AlphabetError(f"digit {node.digit} outside {base.signed_alphabet}")
    if free is not None:
        allowed = set(free)
        unbound = [v for v in phi.free_vars() if v not in allowed]
        if unbound:
            raise UnboundVariableError(f"unbound variables: {', '.join(unbound)}")
    return phi
