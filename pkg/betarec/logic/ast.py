# betarec/logic/ast.py
"""
First-order formulas over <R, 1, <=, +, X_beta>.

Arithmetic atoms are normalized to Linear(terms, const, rel), meaning
sum(c * v) + const rel 0 with integer coefficients. Sum, Leq and IsOne are
constructors for the usual special cases. Variables are plain strings.
"""

from collections.abc import Iterator
from dataclasses import dataclass

from ..realsets.linear import Relation


class Formula:
    """Base class of formula nodes."""

    def free_vars(self) -> tuple[str, ...]:
        """Free variables in order of first occurrence."""
        seen: dict[str, None] = {}
        _collect(self, frozenset(), seen)
        return tuple(seen)

    def children(self) -> tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Linear(Formula):
    """sum(c * v for v, c in terms) + const rel 0; terms hold distinct variables with nonzero coefficients."""
    terms: tuple[tuple[str, int], ...]
    const: int
    rel: Relation

    @classmethod
    def of(cls, terms, const: int, rel: Relation) -> "Linear":
        merged: dict[str, int] = {}
        for v, c in terms:
            merged[v] = merged.get(v, 0) + c
        return cls(tuple((v, c) for v, c in merged.items() if c), const, rel)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.terms)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def truth(self) -> bool:
        """Truth value of a variable-free atom."""
        if self.terms:
            raise ValueError("atom has variables")
        return {
            Relation.EQ: self.const == 0,
            Relation.LT: self.const < 0,
            Relation.LEQ: self.const <= 0,
            Relation.GT: self.const > 0,
            Relation.GEQ: self.const >= 0,
        }[self.rel]


@dataclass(frozen=True)
class DigitAt(Formula):
    """X_{beta,a}(x, y): y is a power of beta and the greedy digit of x at y is a."""
    digit: int
    x: str
    y: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)


def _collect(phi: Formula, bound: frozenset[str], seen: dict[str, None]) -> None:
    if isinstance(phi, Linear):
        names = phi.variables
    elif isinstance(phi, DigitAt):
        names = (phi.x, phi.y)
    else:
        names = ()
    for v in names:
        if v not in bound:
            seen.setdefault(v, None)
    if isinstance(phi, Exists | Forall):
        _collect(phi.body, bound | {phi.var}, seen)
        return
    for child in phi.children():
        _collect(child, bound, seen)


# ── Constructors ───────────────────────────────────────────


def Sum(x: str, y: str, z: str) -> Linear:
    """x + y = z."""
    return Linear.of(((x, 1), (y, 1), (z, -1)), 0, Relation.EQ)


def Leq(x: str, y: str) -> Linear:
    return Linear.of(((x, 1), (y, -1)), 0, Relation.LEQ)


def Less(x: str, y: str) -> Linear:
    return Linear.of(((x, 1), (y, -1)), 0, Relation.LT)


def Equal(x: str, y: str) -> Linear:
    return Linear.of(((x, 1), (y, -1)), 0, Relation.EQ)


def IsOne(x: str) -> Linear:
    return Linear.of(((x, 1),), -1, Relation.EQ)


def conjunction(parts: list[Formula]) -> Formula:
    """Right-nested conjunction of a nonempty list."""
    if not parts:
        raise ValueError("empty conjunction")
    acc = parts[-1]
    for p in reversed(parts[:-1]):
        acc = And(p, acc)
    return acc


def disjunction(parts: list[Formula]) -> Formula:
    if not parts:
        raise ValueError("empty disjunction")
    acc = parts[-1]
    for p in reversed(parts[:-1]):
        acc = Or(p, acc)
    return acc


def exists_all(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = Exists(v, body)
    return body


def walk(phi: Formula) -> Iterator[Formula]:
    """Pre-order traversal."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def formula_size(phi: Formula) -> int:
    """Number of atoms."""
    return sum(1 for node in walk(phi) if isinstance(node, Linear | DigitAt))


def bound_names(phi: Formula) -> set[str]:
    return {node.var for node in walk(phi) if isinstance(node, Exists | Forall)}


# ── Formatting ─────────────────────────────────────────────


def _side(terms: list[tuple[str, int]], const: int) -> str:
    parts = []
    for v, c in terms:
        parts.extend([v] * c)
    if const or not parts:
        parts.append(str(const))
    return " + ".join(parts)


def _format_linear(phi: Linear) -> str:
    left = [(v, c) for v, c in phi.terms if c > 0]
    right = [(v, -c) for v, c in phi.terms if c < 0]
    lc, rc = max(phi.const, 0), max(-phi.const, 0)
    symbol = phi.rel.value
    if phi.rel in (Relation.GT, Relation.GEQ):
        # written with the smaller side first
        left, right, lc, rc = right, left, rc, lc
        symbol = "<" if phi.rel == Relation.GT else "<="
    return f"{_side(left, lc)} {symbol} {_side(right, rc)}"


def format_formula(phi: Formula) -> str:
    """Text in the parser's grammar; binary connectives are fully parenthesized."""
    match phi:
        case Linear():
            return _format_linear(phi)
        case DigitAt(digit=a, x=x, y=y):
            return f"X[{a}]({x}, {y})"
        case Not(body=b):
            return f"!{_wrap(b)}"
        case And(left=a, right=b):
            return f"{_wrap(a)} & {_wrap(b)}"
        case Or(left=a, right=b):
            return f"{_wrap(a)} | {_wrap(b)}"
        case Implies(left=a, right=b):
            return f"{_wrap(a)} -> {_wrap(b)}"
        case Exists(var=v, body=b):
            return f"E {v}. {format_formula(b)}"
        case Forall(var=v, body=b):
            return f"A {v}. {format_formula(b)}"
    raise TypeError(f"not a formula: {phi!r}")


def _wrap(phi: Formula) -> str:
    if isinstance(phi, DigitAt):
        return format_formula(phi)
    return f"({format_formula(phi)})"
